#ifndef MTF_LP_HPP
#define MTF_LP_HPP

#include "mtf/common.hpp"

#include <optional>
#include <vector>

namespace mtf {

/// Dense linear program
///
///   minimize    c'x
///   subject to  A x <= b,  E x = f,  x_j >= lower_j  (where set)
///
/// Variables without a lower bound are free.
struct LinearProgram {
  Vector c;
  Matrix A;
  Vector b;
  Matrix E;
  Vector f;
  std::vector<std::optional<double>> lower;

  explicit LinearProgram(Index num_vars = 0);

  Index num_vars() const { return c.size(); }
  void set_nonnegative();
  void add_inequality(const Eigen::Ref<const Vector>& row, double rhs);
  void add_equality(const Eigen::Ref<const Vector>& row, double rhs);
};

enum class LPStatus { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(LPStatus s);

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Vector x;       // primal witness when optimal
  Vector ray;     // improving direction when unbounded
  double value = kInf;
  long iterations = 0;

  bool optimal() const { return status == LPStatus::optimal; }
};

/// Two-phase dense primal simplex with Bland's rule.
LPSolution solve_lp(const LinearProgram& p);

/// Hard pivot cap; exceeding it yields LPStatus::iteration_limit.
inline constexpr long kMaxSimplexIterations = 1'000'000;

// Euclidean projection by active-set enumeration. Exact at desk scale only:
// n <= 8 and at most 32 constraints / generators.
inline constexpr Index kMaxQpDim = 8;
inline constexpr Index kMaxQpConstraints = 32;

/// argmin ||w - x|| over {w : A w <= b}. The set must be nonempty.
Vector project_qp(const Matrix& A, const Vector& b, const Vector& x);

/// argmin ||w - x|| over co(columns of V) + cone(columns of R).
Vector project_qp_hull(const Matrix& V, const Matrix& R, const Vector& x);

}  // namespace mtf

#endif  // MTF_LP_HPP
