#include "mtf/mintime.hpp"

#include "mtf/lp.hpp"

#include <algorithm>
#include <cmath>

namespace mtf {

namespace {

constexpr double kZeroTime = 1e-12;

MinTimeResult on_target(const Vector& x) {
  MinTimeResult r;
  r.value = 0.0;
  r.attained = true;
  r.target = x;
  r.velocity = Vector::Zero(x.size());
  return r;
}

MinTimeResult from_witness(double t, const Vector& x, const Vector& w, const ConvexSet& omega) {
  MinTimeResult r;
  if (t <= kZeroTime) {
    r.value = 0.0;
    r.target = w;
    r.attained = contains(omega, x, 1e-9);
    if (r.attained) {
      r.target = x;
      r.velocity = Vector::Zero(x.size());
    }
    return r;
  }
  r.value = t;
  r.attained = true;
  r.target = w;
  r.velocity = (w - x) / t;
  return r;
}

// min t over (w, t): w in Omega, w - x in tF. Both sets polyhedral.
MinTimeResult mintime_lp(const Dynamics& f, const ConvexSet& omega, const Vector& x) {
  const Index n = x.size();
  const auto* oh = omega.as<HPolyhedron>();
  const auto* ov = omega.as<VPolytope>();
  const auto* fh = f.set().as<HPolyhedron>();
  const auto* fv = f.set().as<VPolytope>();

  const Index n_lam = ov ? ov->vertices().cols() : 0;
  const Index n_mu = ov ? ov->rays().cols() : 0;
  const Index n_alpha = fv ? fv->vertices().cols() : 0;
  const Index n_beta = fv ? fv->rays().cols() : 0;
  // Layout: [w | t | lambda | mu | alpha | beta]
  const Index iw = 0, it = n, il = n + 1, im = il + n_lam, ia = im + n_mu, ib = ia + n_alpha;
  const Index nvars = ib + n_beta;

  LinearProgram lp(nvars);
  for (Index j = it; j < nvars; ++j) lp.lower[static_cast<std::size_t>(j)] = 0.0;
  lp.c(it) = 1.0;

  if (oh) {
    for (Index i = 0; i < oh->num_constraints(); ++i) {
      Vector row = Vector::Zero(nvars);
      row.segment(iw, n) = oh->A().row(i).transpose();
      lp.add_inequality(row, oh->b()(i));
    }
  } else {
    for (Index i = 0; i < n; ++i) {
      Vector row = Vector::Zero(nvars);
      row(iw + i) = 1.0;
      row.segment(il, n_lam) = -ov->vertices().row(i).transpose();
      if (n_mu > 0) row.segment(im, n_mu) = -ov->rays().row(i).transpose();
      lp.add_equality(row, 0.0);
    }
    Vector row = Vector::Zero(nvars);
    row.segment(il, n_lam).setOnes();
    lp.add_equality(row, 1.0);
  }

  if (fh) {
    // A_F (w - x) <= t b_F
    for (Index i = 0; i < fh->num_constraints(); ++i) {
      Vector row = Vector::Zero(nvars);
      row.segment(iw, n) = fh->A().row(i).transpose();
      row(it) = -fh->b()(i);
      lp.add_inequality(row, fh->A().row(i).dot(x));
    }
  } else {
    // w - x = V alpha + R beta, sum alpha = t
    for (Index i = 0; i < n; ++i) {
      Vector row = Vector::Zero(nvars);
      row(iw + i) = 1.0;
      row.segment(ia, n_alpha) = -fv->vertices().row(i).transpose();
      if (n_beta > 0) row.segment(ib, n_beta) = -fv->rays().row(i).transpose();
      lp.add_equality(row, x(i));
    }
    Vector row = Vector::Zero(nvars);
    row.segment(ia, n_alpha).setOnes();
    row(it) = -1.0;
    lp.add_equality(row, 0.0);
  }

  const auto sol = solve_lp(lp);
  if (!sol.optimal()) throw Error("eval_mintime: LP status " + std::string(to_string(sol.status)));
  return from_witness(sol.x(it), x, sol.x.segment(iw, n), omega);
}

Vector project_scaled(const Dynamics& f, double t, const Vector& y) {
  if (const auto* h = f.set().as<HPolyhedron>()) return t * project_qp(h->A(), h->b(), y / t);
  const auto& v = *f.set().as<VPolytope>();
  return t * project_qp_hull(v.vertices(), v.rays(), y / t);
}

// Ball target, polyhedral dynamics: smallest t with dist(c, x + tF) <= R.
MinTimeResult mintime_ball_target(const Dynamics& f, const Ball& ball, const ConvexSet& omega, const Vector& x) {
  const Vector y = ball.center() - x;
  const double R = ball.radius();
  auto gap = [&](double t) { return (y - project_scaled(f, t, y)).norm(); };

  double lo = 0.0;
  double hi = 1.0;
  while (gap(hi) > R) {
    lo = hi;
    hi *= 2.0;
    if (hi > 0x1p60) throw Error("eval_mintime: bracket growth failed");
  }
  if (lo == 0.0) {
    const double tiny = 1e-13;
    if (gap(tiny) <= R) {
      MinTimeResult r;
      r.value = 0.0;
      r.attained = false;
      return r;
    }
    lo = tiny;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) <= R ? hi : lo) = mid;
  }
  const Vector w = x + project_scaled(f, hi, y);
  return from_witness(hi, x, w, omega);
}

}  // namespace

MinTimeResult eval_mintime(const Dynamics& f, const ConvexSet& omega, const Vector& x) {
  require_dim(f.dim(), omega.dim(), "eval_mintime: target");
  require_dim(f.dim(), x.size(), "eval_mintime: point");
  if (contains(omega, x, 0.0)) return on_target(x);

  if (const auto* fb = f.set().as<Ball>()) {
    if (!fb->center().isZero(0.0)) {
      throw UnsupportedError("eval_mintime: ball dynamics must be centred at the origin");
    }
    const Vector p = euclidean_project(omega, x);
    return from_witness((p - x).norm() / fb->radius(), x, p, omega);
  }
  if (const auto* ob = omega.as<Ball>()) return mintime_ball_target(f, *ob, omega, x);
  return mintime_lp(f, omega, x);
}

bool in_f_closure(const Dynamics& f, const ConvexSet& omega, const Vector& x, double tol) {
  return eval_mintime(f, omega, x).value <= tol;
}

VPolytope f_closure_explicit(const Dynamics& f, const VPolytope& omega) {
  require_dim(f.dim(), omega.dim(), "f_closure_explicit");
  if (!omega.bounded()) {
    throw ValidationError("f_closure_explicit: target must be compact (no recession rays)");
  }
  const Matrix gens = horizon_cone(f.set()).generators();
  return VPolytope(omega.vertices(), -gens);
}

std::vector<Vector> generalized_projection(const Dynamics& f, const ConvexSet& omega, const Vector& x) {
  if (!is_bounded(omega)) throw ValidationError("generalized_projection: target must be bounded");
  const auto res = eval_mintime(f, omega, x);
  if (!res.target) throw NotAttainedError("generalized_projection: infimum not attained");
  std::vector<Vector> out{*res.target};
  if (res.value == 0.0) return out;

  const bool polyhedral = !omega.as<Ball>() && !f.set().as<Ball>();
  if (!polyhedral || x.size() > kMaxConversionDim) return out;

  // Optimal face: Omega intersected with x + T F, slightly relaxed against LP round-off.
  const HPolyhedron oh = as_hpolyhedron(omega);
  const HPolyhedron fh = as_hpolyhedron(f.set());
  const double t = res.value * (1.0 + 1e-9) + 1e-9;
  Matrix A(oh.num_constraints() + fh.num_constraints(), x.size());
  Vector b(A.rows());
  A << oh.A(), fh.A();
  b << oh.b(), (t * fh.b() + fh.A() * x);
  const VPolytope face = to_vertices(HPolyhedron(std::move(A), std::move(b)));
  const double scale = 1.0 + x.cwiseAbs().maxCoeff();
  for (Index j = 0; j < face.vertices().cols(); ++j) {
    const Vector w = face.vertices().col(j);
    bool dup = false;
    for (const auto& u : out) dup = dup || (u - w).cwiseAbs().maxCoeff() <= 1e-6 * scale;
    if (!dup) out.push_back(w);
  }
  return out;
}

ExpansionHandle::ExpansionHandle(ConvexSet omega_, Dynamics dynamics_, double radius_)
    : omega(std::move(omega_)), dynamics(std::move(dynamics_)), radius(radius_) {
  if (!(radius > 0.0)) throw ValidationError("expansion radius must be positive");
  require_dim(dynamics.dim(), omega.dim(), "ExpansionHandle");
}

double expansion_support(const ExpansionHandle& h, const Vector& v) {
  const double so = support(h.omega, v).value;
  const double sf = support(h.dynamics.set(), -v).value;
  if (so == kInf || sf == kInf) return kInf;
  return so + h.radius * sf;
}

const char* to_string(SubdiffCase c) {
  switch (c) {
    case SubdiffCase::in_target: return "in_target";
    case SubdiffCase::in_f_closure: return "in_f_closure";
    case SubdiffCase::outside: return "outside";
  }
  return "unknown";
}

SubdiffCase classify_mintime_point(const Dynamics& f, const ConvexSet& omega, const Vector& xbar) {
  if (contains(omega, xbar, kMembershipTol)) return SubdiffCase::in_target;
  if (eval_mintime(f, omega, xbar).value <= kMembershipTol) return SubdiffCase::in_f_closure;
  return SubdiffCase::outside;
}

SubdiffVerdict mintime_subdiff_contains(const Dynamics& f, const ConvexSet& omega, const Vector& xbar,
                                        const Vector& v, double tol) {
  require_dim(f.dim(), v.size(), "mintime_subdiff_contains");
  SubdiffVerdict out;
  out.where = classify_mintime_point(f, omega, xbar);
  switch (out.where) {
    case SubdiffCase::in_target:
      out.member = normal_cone_contains(omega, xbar, v, tol).member && cstar_contains(f, v, tol);
      break;
    case SubdiffCase::in_f_closure: {
      // sigma of Omega - F_inf: sigma_Omega(v) when sigma_{F_inf}(-v) = 0, else +inf.
      if (horizon_cone(f.set()).support(-v) > 0.0) {
        out.member = false;
        break;
      }
      out.member = support(omega, v).value <= v.dot(xbar) + tol && cstar_contains(f, v, tol);
      break;
    }
    case SubdiffCase::outside: {
      const ExpansionHandle h(omega, f, eval_mintime(f, omega, xbar).value);
      out.member = expansion_support(h, v) <= v.dot(xbar) + tol && sstar_contains(f, v, tol);
      break;
    }
  }
  return out;
}

bool mintime_subdiff_via_projection(const Dynamics& f, const ConvexSet& omega, const Vector& xbar,
                                    const Vector& v, double tol) {
  require_dim(f.dim(), v.size(), "mintime_subdiff_via_projection");
  if (eval_mintime(f, omega, xbar).value <= tol) {
    throw ValidationError("mintime_subdiff_via_projection: point must lie outside cl_F(Omega)");
  }
  const Vector w = generalized_projection(f, omega, xbar).front();
  return gauge_subdiff_contains(f, w - xbar, -v, tol) && normal_cone_contains(omega, w, v, tol).member;
}

bool shift_inequality_check(const Dynamics& f, const ConvexSet& omega, const Vector& x, const Vector& dir,
                            double t) {
  if (!contains(f.set(), dir, kMembershipTol)) throw ValidationError("shift_inequality_check: f must lie in F");
  if (t < 0.0) throw ValidationError("shift_inequality_check: t must be nonnegative");
  return eval_mintime(f, omega, x - t * dir).value <= eval_mintime(f, omega, x).value + t + 1e-7;
}

}  // namespace mtf
