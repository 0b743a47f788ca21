#ifndef MTF_GAUGE_HPP
#define MTF_GAUGE_HPP

#include "mtf/geometry.hpp"

#include <vector>

namespace mtf {

/// How a gauge value is certified.
enum class GaugeWitness {
  origin,   // x = 0
  horizon,  // x != 0 lies in the horizon cone: infimum 0, not attained
  active,   // positive value; `point` = x / value lies on the boundary of F
};

const char* to_string(GaugeWitness w);

struct GaugeValue {
  double value = 0.0;
  GaugeWitness witness = GaugeWitness::origin;
  std::vector<Index> active_rows;  // H-form: rows attaining the max
  Vector point;                    // x / value when witness == active
};

/// Minkowski gauge rho_F(x) = inf{t > 0 : x in tF}.
GaugeValue gauge(const Dynamics& f, const Vector& x);

/// v in the subdifferential of rho_F at x: sigma_F(v) <= 1 and <v, x> >= rho_F(x).
bool gauge_subdiff_contains(const Dynamics& f, const Vector& x, const Vector& v, double tol = kMembershipTol);

/// v in C* = {sigma_F(-v) <= 1}.
bool cstar_contains(const Dynamics& f, const Vector& v, double tol = kMembershipTol);

/// v in S* = {sigma_F(-v) = 1}.
bool sstar_contains(const Dynamics& f, const Vector& v, double tol = kMembershipTol);

/// Lipschitz constant ||F°|| of rho_F (and of every minimal time function with dynamics F).
double gauge_continuity_modulus(const Dynamics& f);

}  // namespace mtf

#endif  // MTF_GAUGE_HPP
