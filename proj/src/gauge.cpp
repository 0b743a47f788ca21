#include "mtf/gauge.hpp"

#include "mtf/lp.hpp"

#include <algorithm>
#include <cmath>

// Fault-injection builds scale every gauge value; the verification suites must catch it.
#ifndef MTF_FAULT_GAUGE_SCALE
#define MTF_FAULT_GAUGE_SCALE 1.0
#endif

namespace mtf {

const char* to_string(GaugeWitness w) {
  switch (w) {
    case GaugeWitness::origin: return "origin";
    case GaugeWitness::horizon: return "horizon";
    case GaugeWitness::active: return "active";
  }
  return "unknown";
}

namespace {

GaugeValue finish(GaugeValue g, const Vector& x) {
  g.value *= MTF_FAULT_GAUGE_SCALE;
  if (g.value > 0.0) {
    g.witness = GaugeWitness::active;
    g.point = x / g.value;
  } else {
    g.value = 0.0;
    g.witness = x.isZero(0.0) ? GaugeWitness::origin : GaugeWitness::horizon;
  }
  return g;
}

GaugeValue gauge_h(const HPolyhedron& h, const Vector& x) {
  GaugeValue g;
  if (h.num_constraints() == 0) return g;
  const Vector ratios = (h.A() * x).cwiseQuotient(h.b());
  const double top = ratios.maxCoeff();
  g.value = std::max(0.0, top);
  if (top > 0.0) {
    for (Index i = 0; i < ratios.size(); ++i) {
      if (ratios(i) >= top - 1e-12 * std::max(1.0, top)) g.active_rows.push_back(i);
    }
  }
  return g;
}

GaugeValue gauge_ball(const Ball& b, const Vector& x) {
  GaugeValue g;
  const Vector& c = b.center();
  const double r = b.radius();
  if (c.isZero(0.0)) {
    g.value = x.norm() / r;
    return g;
  }
  // ||x - t c|| = t r  =>  t^2 (r^2 - |c|^2) + 2 t (x.c) - |x|^2 = 0, positive root.
  const double xc = x.dot(c);
  const double denom = r * r - c.squaredNorm();
  const double disc = xc * xc + denom * x.squaredNorm();
  g.value = (-xc + std::sqrt(std::max(0.0, disc))) / denom;
  return g;
}

// min t  s.t.  x = V lambda + R mu,  sum lambda = t,  lambda, mu >= 0.
GaugeValue gauge_v(const VPolytope& v, const Vector& x) {
  const Index n = x.size();
  const Index nv = v.vertices().cols();
  const Index nr = v.rays().cols();
  LinearProgram lp(nv + nr);
  lp.set_nonnegative();
  lp.c.head(nv).setOnes();
  for (Index i = 0; i < n; ++i) {
    Vector row(nv + nr);
    row.head(nv) = v.vertices().row(i).transpose();
    if (nr > 0) row.tail(nr) = v.rays().row(i).transpose();
    lp.add_equality(row, x(i));
  }
  const auto sol = solve_lp(lp);
  if (!sol.optimal()) throw Error("gauge: scaled-combination LP status " + std::string(to_string(sol.status)));
  GaugeValue g;
  // Simplex round-off on a horizon direction leaves ~1e-16 instead of an exact 0.
  g.value = sol.value <= 1e-12 * x.norm() ? 0.0 : sol.value;
  return g;
}

}  // namespace

GaugeValue gauge(const Dynamics& f, const Vector& x) {
  require_dim(f.dim(), x.size(), "gauge");
  if (x.isZero(0.0)) return finish(GaugeValue{}, x);
  const auto& s = f.set();
  if (const auto* h = s.as<HPolyhedron>()) return finish(gauge_h(*h, x), x);
  if (const auto* v = s.as<VPolytope>()) return finish(gauge_v(*v, x), x);
  return finish(gauge_ball(*s.as<Ball>(), x), x);
}

bool gauge_subdiff_contains(const Dynamics& f, const Vector& x, const Vector& v, double tol) {
  require_dim(f.dim(), v.size(), "gauge_subdiff_contains");
  if (support(f.set(), v).value > 1.0 + tol) return false;
  return v.dot(x) >= gauge(f, x).value - tol;
}

bool cstar_contains(const Dynamics& f, const Vector& v, double tol) {
  require_dim(f.dim(), v.size(), "cstar_contains");
  return support(f.set(), -v).value <= 1.0 + tol;
}

bool sstar_contains(const Dynamics& f, const Vector& v, double tol) {
  require_dim(f.dim(), v.size(), "sstar_contains");
  const double s = support(f.set(), -v).value;
  return std::isfinite(s) && std::abs(s - 1.0) <= tol;
}

double gauge_continuity_modulus(const Dynamics& f) { return polar_norm(f); }

}  // namespace mtf
