#ifndef MTF_COMMON_HPP
#define MTF_COMMON_HPP

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>

namespace mtf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Default absolute tolerance on constraint residuals.
inline constexpr double kMembershipTol = 1e-7;
/// Pivot / ratio-test tolerance of the simplex solver.
inline constexpr double kPivotTol = 1e-9;
/// Largest dimension for which H<->V conversions are attempted.
inline constexpr Index kMaxConversionDim = 4;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Vectors or matrices whose sizes do not agree.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Input violates a documented precondition (empty set, 0 not interior, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Operation exists but not for this combination of inputs or this scale.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// An infimum that is not attained, so no witness exists.
class NotAttainedError : public Error {
public:
  using Error::Error;
};

inline void require_dim(Index expected, Index got, const char* what) {
  if (expected != got) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

}  // namespace mtf

#endif  // MTF_COMMON_HPP
