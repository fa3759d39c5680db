#ifndef NEGTYPE_NEGTYPE_HPP
#define NEGTYPE_NEGTYPE_HPP

#include "negtype/bounds.hpp"
#include "negtype/errors.hpp"
#include "negtype/gap_search.hpp"
#include "negtype/io.hpp"
#include "negtype/metric_space.hpp"
#include "negtype/negative_type.hpp"
#include "negtype/oracle.hpp"
#include "negtype/simplex_gap.hpp"
#include "negtype/trees.hpp"

#endif  // NEGTYPE_NEGTYPE_HPP
