#ifndef MTF_MINTIME_HPP
#define MTF_MINTIME_HPP

#include "mtf/gauge.hpp"
#include "mtf/geometry.hpp"

#include <optional>
#include <vector>

namespace mtf {

/// Value of the minimal time function T(x) = inf{t > 0 : (x + tF) meets Omega}
/// with the certificate x + value * velocity = target.
struct MinTimeResult {
  double value = 0.0;
  bool attained = true;
  std::optional<Vector> target;    // w in Omega
  std::optional<Vector> velocity;  // f in F; absent when the infimum is not attained
};

MinTimeResult eval_mintime(const Dynamics& f, const ConvexSet& omega, const Vector& x);

/// x in cl_F(Omega), i.e. T(x) <= tol.
bool in_f_closure(const Dynamics& f, const ConvexSet& omega, const Vector& x, double tol = kMembershipTol);

/// cl_F(Omega) = Omega - F_inf for a compact V-form target.
VPolytope f_closure_explicit(const Dynamics& f, const VPolytope& omega);

/// Minimizers of rho_F(w - x) over a bounded target. The first entry is the
/// solver witness; for polyhedral data (n <= 4) the vertices of the optimal
/// face follow.
std::vector<Vector> generalized_projection(const Dynamics& f, const ConvexSet& omega, const Vector& x);

/// Implicit sublevel set {x : T(x) <= radius} = Omega - radius * F.
struct ExpansionHandle {
  ExpansionHandle(ConvexSet omega, Dynamics dynamics, double radius);

  ConvexSet omega;
  Dynamics dynamics;
  double radius;
};

/// sigma_Omega(v) + r * sigma_F(-v).
double expansion_support(const ExpansionHandle& h, const Vector& v);

enum class SubdiffCase { in_target, in_f_closure, outside };

const char* to_string(SubdiffCase c);

struct SubdiffVerdict {
  bool member = false;
  SubdiffCase where = SubdiffCase::in_target;
};

/// Classifies xbar (tolerance 1e-7) and tests v against
///   in target:        N(xbar; Omega) and C*
///   in F-closure:     N(xbar; cl_F Omega) and C*
///   outside:          N(xbar; Omega_r) and S*, r = T(xbar).
SubdiffCase classify_mintime_point(const Dynamics& f, const ConvexSet& omega, const Vector& xbar);
SubdiffVerdict mintime_subdiff_contains(const Dynamics& f, const ConvexSet& omega, const Vector& xbar,
                                        const Vector& v, double tol = kMembershipTol);

/// Membership through a generalized projection: (-d rho_F(w - xbar)) and N(w; Omega).
bool mintime_subdiff_via_projection(const Dynamics& f, const ConvexSet& omega, const Vector& xbar,
                                    const Vector& v, double tol = kMembershipTol);

/// T(x - t f) <= T(x) + t for f in F, t >= 0.
bool shift_inequality_check(const Dynamics& f, const ConvexSet& omega, const Vector& x, const Vector& dir,
                            double t);

}  // namespace mtf

#endif  // MTF_MINTIME_HPP
