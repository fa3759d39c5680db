#include "negtype/cli.hpp"

int main(int argc, char** argv) { return negtype::cli::run_main(argc, argv); }
