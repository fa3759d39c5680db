#ifndef NEGTYPE_ERRORS_HPP
#define NEGTYPE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace negtype {

// Base of all library errors. `name()` is stable and machine-readable;
// `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define NEGTYPE_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                             \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}    \
  }

NEGTYPE_DEFINE_ERROR(AsymmetricMatrix);
NEGTYPE_DEFINE_ERROR(NonzeroDiagonal);
NEGTYPE_DEFINE_ERROR(ZeroOffDiagonal);
NEGTYPE_DEFINE_ERROR(NegativeDistance);
NEGTYPE_DEFINE_ERROR(TriangleViolation);
NEGTYPE_DEFINE_ERROR(NonFiniteDistance);
NEGTYPE_DEFINE_ERROR(NotSquare);
NEGTYPE_DEFINE_ERROR(TooFewPoints);
NEGTYPE_DEFINE_ERROR(NegativeExponent);
NEGTYPE_DEFINE_ERROR(NonpositiveTolerance);
NEGTYPE_DEFINE_ERROR(DimensionMismatch);
NEGTYPE_DEFINE_ERROR(UnnormalizedLoads);
NEGTYPE_DEFINE_ERROR(InvalidSimplex);
NEGTYPE_DEFINE_ERROR(TooLarge);
NEGTYPE_DEFINE_ERROR(TooLargeSimplex);
NEGTYPE_DEFINE_ERROR(BadResolution);
NEGTYPE_DEFINE_ERROR(InvalidRatio);
NEGTYPE_DEFINE_ERROR(RatioNeedsSemiMetric);
NEGTYPE_DEFINE_ERROR(NotATree);
NEGTYPE_DEFINE_ERROR(NonpositiveWeight);
NEGTYPE_DEFINE_ERROR(DuplicatePoints);
NEGTYPE_DEFINE_ERROR(FileError);
NEGTYPE_DEFINE_ERROR(UsageError);

#undef NEGTYPE_DEFINE_ERROR

}  // namespace negtype

#endif  // NEGTYPE_ERRORS_HPP
