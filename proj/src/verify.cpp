#include "mtf/verify.hpp"

#include "mtf/fixtures.hpp"
#include "mtf/gauge.hpp"
#include "mtf/mintime.hpp"
#include "mtf/signed.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace mtf {

bool SuiteResult::pass() const {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gauge", "mintime", "signed", "sdist"};
  return names;
}

namespace {

using fixtures::cols;
using fixtures::vec;

CertReport start(std::string name, double tol, std::uint64_t seed, std::string detail) {
  CertReport r;
  r.name = std::move(name);
  r.tolerance = tol;
  r.seed = seed;
  r.detail = std::move(detail);
  return r;
}

CertReport done(CertReport r) {
  r.finalize();
  return r;
}

struct NamedDynamics {
  std::string name;
  Dynamics f;
};

struct Case {
  std::string name;
  Dynamics f;
  ConvexSet omega;
};

Vector concat(const Vector& a, const Vector& b) {
  Vector out(a.size() + b.size());
  out << a, b;
  return out;
}

// co{(-1,-1), (2,-1), (0,2)} in H-form.
HPolyhedron big_triangle() { return to_halfspaces(VPolytope(cols({{-1, -1}, {2, -1}, {0, 2}}))); }
// co{(0,0), (2,0), (0,1)} in V-form.
VPolytope small_triangle() { return VPolytope(cols({{0, 0}, {2, 0}, {0, 1}})); }

std::vector<Vector> unit_directions(int count) {
  std::vector<Vector> out;
  for (int k = 0; k < count; ++k) {
    const double a = 2.0 * std::numbers::pi * k / count;
    out.push_back(vec({std::cos(a), std::sin(a)}));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Criterion 1

void gauge_oracle(SuiteResult& out, std::uint64_t seed) {
  const std::vector<NamedDynamics> fam{{"box", Dynamics(fixtures::box())},
                                       {"ball_r1", Dynamics(fixtures::ball(1.0))},
                                       {"ball_r2", Dynamics(fixtures::ball(2.0))},
                                       {"triangle", Dynamics(fixtures::triangle())},
                                       {"slab", Dynamics(fixtures::slab())}};
  std::uint64_t k = 0;
  for (const auto& [name, f] : fam) {
    auto rep = start("c1.gauge_oracle." + name, 1e-8, seed,
                     "|gauge - gauge_bisect| on 1000 uniform points of [-5,5]^2 plus axis points");
    Rng rng(seed + k++);
    std::vector<Vector> pts{vec({0, 0}), vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1}), vec({-7, 0})};
    for (int i = 0; i < 1000; ++i) pts.push_back(rng.uniform(vec({-5, -5}), vec({5, 5})));
    for (const auto& p : pts) rep.record(std::abs(gauge(f, p).value - gauge_bisect(f, p)), p);
    out.reports.push_back(done(rep));
  }
}

// ---------------------------------------------------------------------------
// Criteria 2 - 6

void mintime_oracle(SuiteResult& out, std::uint64_t seed) {
  const std::vector<NamedDynamics> fam{{"box", Dynamics(fixtures::box())},
                                       {"ball_r1", Dynamics(fixtures::ball(1.0))},
                                       {"ball_r2", Dynamics(fixtures::ball(2.0))},
                                       {"triangle", Dynamics(to_halfspaces(fixtures::triangle()))},
                                       {"thin_box", Dynamics(fixtures::thin_box())},
                                       {"slab", Dynamics(fixtures::slab())}};
  const std::vector<std::pair<std::string, ConvexSet>> targets{
      {"box", fixtures::box()}, {"triangle", big_triangle()}, {"disk", Ball(vec({0.5, -0.5}), 0.75)}};
  SampleSpec spec;
  spec.resolution = 201;
  spec.seed = seed;

  auto zero = start("c2.target_zero", 0.0, seed, "eval_mintime and mintime_bruteforce both exactly 0 on target points");
  std::uint64_t k = 100;
  for (const auto& [tname, om] : targets) {
    const Box bb = bounding_box(om);
    for (const auto& [fname, f] : fam) {
      auto rep = start("c2.mintime_oracle." + fname + "." + tname, 1e-9, seed,
                       "violation = max(eval - oracle, oracle - eval - 2e-2); 201^2 grid over the target's box");
      Rng rng(seed + k++);
      for (int i = 0; i < 20; ++i) {
        Vector x;
        do x = rng.uniform(vec({-4, -4}), vec({4, 4})); while (contains(om, x, 0.0));
        const double e = eval_mintime(f, om, x).value;
        const double o = mintime_bruteforce(f, om, x, spec);
        rep.record(std::max(e - o, o - e - 2e-2), x);
      }
      for (int i = 0; i < 2; ++i) {
        Vector x;
        do x = rng.uniform(bb.lo, bb.hi); while (!contains(om, x, 0.0));
        const double e = eval_mintime(f, om, x).value;
        const double o = mintime_bruteforce(f, om, x, spec);
        zero.record(std::abs(e) + std::abs(o), x);
      }
      out.reports.push_back(done(rep));
    }
  }
  out.reports.push_back(done(zero));
}

void continuity(SuiteResult& out, std::uint64_t seed) {
  const std::vector<Case> cases{{"ball_r1.box", Dynamics(fixtures::ball(1.0)), fixtures::box()},
                                {"triangle.box", Dynamics(fixtures::triangle()), fixtures::box()},
                                {"slab.small_triangle", Dynamics(fixtures::slab()), small_triangle()},
                                {"thin_box.small_triangle", Dynamics(fixtures::thin_box()), small_triangle()}};
  std::uint64_t k = 200;
  for (const auto& c : cases) {
    auto cont = start("c3.continuity." + c.name, 1e-7, seed,
                      "|T(x) - T(y)| - max(rho(y - x), rho(x - y)) over 10^4 pairs in [-4,4]^2; witness = (x, y)");
    auto lip = start("c3.lipschitz." + c.name, 1e-7, seed,
                     "|T(x) - T(y)| - polar_norm(F) |x - y| over the same pairs; witness = (x, y)");
    const double L = polar_norm(c.f);
    Rng rng(seed + k++);
    for (int i = 0; i < 10000; ++i) {
      const Vector x = rng.uniform(vec({-4, -4}), vec({4, 4}));
      const Vector y = rng.uniform(vec({-4, -4}), vec({4, 4}));
      const double d = std::abs(eval_mintime(c.f, c.omega, x).value - eval_mintime(c.f, c.omega, y).value);
      const double bound = std::max(gauge(c.f, y - x).value, gauge(c.f, x - y).value);
      cont.record(d - bound, concat(x, y));
      lip.record(d - L * (x - y).norm(), concat(x, y));
    }
    out.reports.push_back(done(cont));
    out.reports.push_back(done(lip));
  }
}

void f_closure(SuiteResult& out, std::uint64_t seed) {
  const Dynamics slab(fixtures::slab());
  struct Unbounded {
    std::string name;
    VPolytope omega;
    std::function<bool(const Vector&)> truth;    // membership in the expected closure
    std::function<double(const Vector&)> dist;  // Euclidean distance to it
  };
  const std::vector<Unbounded> cases{
      {"slab.origin", fixtures::origin(), [](const Vector& x) { return x(1) == 0.0 && x(0) >= 0.0; },
       [](const Vector& x) { return x(0) >= 0.0 ? std::abs(x(1)) : x.norm(); }},
      {"slab.segment", VPolytope(cols({{0, 0}, {0, 1}})),
       [](const Vector& x) { return x(0) >= 0.0 && x(1) >= 0.0 && x(1) <= 1.0; },
       [](const Vector& x) {
         const Vector p = vec({std::max(x(0), 0.0), std::clamp(x(1), 0.0, 1.0)});
         return (x - p).norm();
       }}};
  std::uint64_t k = 300;
  for (const auto& c : cases) {
    auto rep = start("c4.f_closure." + c.name, 0.0, seed,
                     "in_f_closure and f_closure_explicit vs the expected set on 1000 points; band 1e-6");
    const VPolytope expl = f_closure_explicit(slab, c.omega);
    Rng rng(seed + k++);
    for (int i = 0; i < 1000; ++i) {
      Vector x;
      switch (i % 4) {
        case 0: x = vec({rng.uniform(-5, 5), rng.uniform() < 0.5 ? 0.0 : 1.0}); break;
        case 1: x = vec({rng.uniform(-5, 5), (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(1e-5, 1e-2)}); break;
        case 2: x = vec({-rng.uniform(1e-5, 1e-2), rng.uniform(0, 1)}); break;
        default: x = rng.uniform(vec({-5, -5}), vec({5, 5})); break;
      }
      const bool want = c.truth(x);
      if (!want && c.dist(x) <= 1e-6) continue;
      const bool a = in_f_closure(slab, c.omega, x);
      const bool b = contains(expl, x);
      rep.record((a != want ? 1.0 : 0.0) + (b != want ? 1.0 : 0.0), x);
    }
    out.reports.push_back(done(rep));
  }

  const ConvexSet tri = small_triangle();
  for (const auto& [name, f] : std::vector<NamedDynamics>{{"ball_r1", Dynamics(fixtures::ball(1.0))},
                                                          {"box", Dynamics(fixtures::box())}}) {
    auto rep = start("c4.bounded_closure." + name, 0.0, seed,
                     "bounded F: in_f_closure equals membership in the closed target on 1000 points; band 1e-6");
    Rng rng(seed + k++);
    for (int i = 0; i < 1000; ++i) {
      Vector x = rng.uniform(vec({-1, -1}), vec({3, 2}));
      if (i % 3 == 0) x = euclidean_project(tri, x);  // boundary points
      const bool want = contains(tri, x, 1e-9);
      if (!want && (x - euclidean_project(tri, x)).norm() <= 1e-6) continue;
      rep.record(in_f_closure(f, tri, x) != want ? 1.0 : 0.0, x);
    }
    out.reports.push_back(done(rep));
  }
}

void expansion(SuiteResult& out, std::uint64_t seed) {
  struct Exp {
    std::string name;
    Dynamics f;
    ConvexSet omega;
    double r;
  };
  const std::vector<Exp> cases{{"triangle.box.r0.5", Dynamics(fixtures::triangle()), fixtures::box(), 0.5},
                               {"thin_box.small_triangle.r1", Dynamics(fixtures::thin_box()), small_triangle(), 1.0},
                               {"slab.box.r0.75", Dynamics(fixtures::slab()), fixtures::box(), 0.75}};
  std::uint64_t k = 400;
  for (const auto& c : cases) {
    auto rep = start("c5.expansion." + c.name, 1e-6, seed,
                     "|T_Omega(x) - (T_{Omega + r(-F)}(x) + r)| on 100 points with T(x) > r");
    const VPolytope om_r = minkowski_sum(as_vpolytope(c.omega), scaled(as_vpolytope(c.f.set()), -c.r));
    Rng rng(seed + k++);
    int n = 0;
    while (n < 100) {
      const Vector x = rng.uniform(vec({-6, -6}), vec({6, 6}));
      const double t = eval_mintime(c.f, c.omega, x).value;
      if (t <= c.r + 1e-3) continue;
      ++n;
      rep.record(std::abs(t - (eval_mintime(c.f, om_r, x).value + c.r)), x);
    }
    out.reports.push_back(done(rep));
  }

  auto shift = start("c5.shift_inequality", 1e-7, seed,
                     "T(x - t f) - T(x) - t over 1000 triples (x, f in F, t in [0,3]); witness = (x, f, t)");
  const std::vector<Case> sc{{"ball", Dynamics(fixtures::ball(1.0)), fixtures::box()},
                             {"triangle", Dynamics(fixtures::triangle()), fixtures::box()},
                             {"slab", Dynamics(fixtures::slab()), fixtures::box()},
                             {"thin_box", Dynamics(fixtures::thin_box()), small_triangle()}};
  Rng rng(seed + k++);
  for (int i = 0; i < 1000; ++i) {
    const auto& c = sc[static_cast<std::size_t>(i % 4)];
    const Vector x = rng.uniform(vec({-4, -4}), vec({4, 4}));
    Vector f;
    do f = rng.uniform(vec({-3, -2}), vec({2, 2})); while (!contains(c.f.set(), f, 0.0));
    const double t = rng.uniform(0, 3);
    const double gap = eval_mintime(c.f, c.omega, x - t * f).value - eval_mintime(c.f, c.omega, x).value - t;
    shift.record(gap, concat(concat(x, f), vec({t})));
    if (!shift_inequality_check(c.f, c.omega, x, f, t)) shift.record(1.0, concat(concat(x, f), vec({t})));
  }
  out.reports.push_back(done(shift));
}

// Verdicts of `accept` against the subgradient inequality of `fn` at xbar.
// Accepted candidates must certify; rejected ones whose margin
//   m(v) = max_d <v, d> - f'(xbar; d)   (72 unit directions, finite differences)
// is at least 0.1 must fail certification, and rejected ones with m(v) <= -1e-2
// (strictly inside the subdifferential) must not certify.
struct ProbeStats {
  long accepted = 0;
  long rejected = 0;
  long separated = 0;
};

void certify_candidates(const ScalarFn& fn, const Vector& xbar, const std::vector<Vector>& cands,
                        const std::function<bool(const Vector&)>& accept, const std::vector<Vector>& shared,
                        const std::vector<Vector>& extra, CertReport& rep, ProbeStats& stats,
                        const std::function<void(const Vector&, bool)>& also = {}) {
  const auto dirs = unit_directions(72);
  std::vector<double> slope;
  std::vector<Vector> pts = shared;
  for (auto& p : axis_probes(xbar)) pts.push_back(std::move(p));
  for (const auto& d : dirs) {
    slope.push_back(dirderiv_fd(fn, xbar, d).value);
    for (double h : {1e-3, 1e-2, 0.1, 1.0}) pts.push_back(xbar + h * d);
  }
  pts.insert(pts.end(), extra.begin(), extra.end());
  const SampledFunction fs = sample_function(fn, std::move(pts));
  const double fx = fn(xbar);

  for (const auto& v : cands) {
    const bool member = accept(v);
    double margin = -kInf;
    for (std::size_t k = 0; k < dirs.size(); ++k) margin = std::max(margin, v.dot(dirs[k]) - slope[k]);
    const auto cert = subgradient_certify(fs, xbar, fx, v, 1e-7);
    double viol = 0.0;
    if (member) {
      ++stats.accepted;
      if (!cert.pass) viol = cert.worst_violation;
    } else {
      ++stats.rejected;
      if (margin >= 0.1) {
        ++stats.separated;
        if (cert.pass) viol = margin;
      }
      if (margin <= -1e-2 && cert.pass) viol = -margin;
    }
    rep.record(viol, concat(xbar, v));
    if (also) also(v, member);
  }
}

struct Probe {
  Vector xbar;
  SubdiffCase expect;
  std::vector<Vector> members;
};

struct SubdiffFixture {
  std::string name;
  Dynamics f;
  ConvexSet omega;
  std::vector<Probe> hand;
};

void subdiff_agreement(SuiteResult& out, std::uint64_t seed) {
  using SC = SubdiffCase;
  const double r2 = std::sqrt(0.5);
  std::vector<SubdiffFixture> fx;
  fx.push_back({"ball_r1.box", Dynamics(fixtures::ball(1.0)), fixtures::box(),
                {{vec({0, 0}), SC::in_target, {vec({0, 0})}},
                 {vec({1, 0}), SC::in_target, {vec({0.5, 0}), vec({1, 0}), vec({0, 0})}},
                 {vec({1, 1}), SC::in_target, {vec({0.5, 0.5}), vec({0.6, 0.8}), vec({0, 1})}},
                 {vec({0.3, -1}), SC::in_target, {vec({0, -1}), vec({0, -0.4})}},
                 {vec({3, 0}), SC::outside, {vec({1, 0})}},
                 {vec({3, 3}), SC::outside, {vec({r2, r2})}},
                 {vec({-2, 0.5}), SC::outside, {vec({-1, 0})}},
                 {vec({0, -4}), SC::outside, {vec({0, -1})}}}});
  fx.push_back({"slab.box", Dynamics(fixtures::slab()), fixtures::box(),
                {{vec({1, 0}), SC::in_target, {vec({0, 0})}},
                 {vec({-1, 0}), SC::in_target, {vec({-1, 0}), vec({-0.5, 0}), vec({0, 0})}},
                 {vec({-1, 1}), SC::in_target, {vec({-0.5, 0.5}), vec({-1, 0}), vec({0, 1}), vec({-0.2, 0.3})}},
                 {vec({0, 1}), SC::in_target, {vec({0, 1}), vec({0, 0.5})}},
                 {vec({3, 1}), SC::in_f_closure, {vec({0, 0.5}), vec({0, 1}), vec({0, 0})}},
                 {vec({5, 0}), SC::in_f_closure, {vec({0, 0})}},
                 {vec({2, -1}), SC::in_f_closure, {vec({0, -1}), vec({0, -0.25})}},
                 {vec({-3, 0}), SC::outside, {vec({-1, 0})}},
                 {vec({-3, 3}), SC::outside, {vec({-1, 0}), vec({0, 1}), vec({-0.5, 0.5}), vec({-0.3, 0.7})}},
                 {vec({5, 3}), SC::outside, {vec({0, 1})}},
                 {vec({3, -2}), SC::outside, {vec({0, -1})}}}});
  fx.push_back({"box.small_triangle", Dynamics(fixtures::box()), small_triangle(),
                {{vec({0, 0}), SC::in_target, {vec({-0.5, -0.5}), vec({-1, 0}), vec({0, 0}), vec({-0.3, -0.2})}},
                 {vec({1, 0}), SC::in_target, {vec({0, -1}), vec({0, -0.3})}},
                 {vec({1, 0.5}), SC::in_target, {vec({1.0 / 3, 2.0 / 3}), vec({0.1, 0.2})}},
                 {vec({-2, -1}), SC::outside, {vec({-1, 0})}},
                 {vec({3, 3}), SC::outside, {vec({1.0 / 3, 2.0 / 3})}}}});

  const char* detail =
      "accepted v must satisfy the subgradient inequality on sampled points; rejected v with finite-difference "
      "margin >= 0.1 must violate it; witness = (xbar, v)";
  CertReport reps[3] = {start("c6.subdiff.in_target", 1e-7, seed, detail),
                        start("c6.subdiff.in_f_closure", 1e-7, seed, detail),
                        start("c6.subdiff.outside", 1e-7, seed, detail)};
  ProbeStats stats[3];
  auto proj = start("c6.projection_agreement", 0.0, seed,
                    "outside case, bounded target: mintime_subdiff_contains == mintime_subdiff_via_projection; "
                    "witness = (xbar, v)");
  auto cls = start("c6.case_classification", 0.0, seed, "hand-placed points land in their intended case");

  Rng rng(seed + 500);
  std::vector<Vector> shared;
  for (int i = 0; i < 300; ++i) shared.push_back(rng.uniform(vec({-6, -6}), vec({6, 6})));

  for (const auto& fix : fx) {
    const ScalarFn T = [&](const Vector& x) { return eval_mintime(fix.f, fix.omega, x).value; };
    const bool bounded_target = is_bounded(fix.omega);
    std::vector<Vector> verts;
    const VPolytope ov = as_vpolytope(fix.omega);
    for (Index j = 0; j < ov.vertices().cols(); ++j) verts.push_back(ov.vertices().col(j));
    const HPolyhedron oh = as_hpolyhedron(fix.omega);

    std::vector<Probe> probes = fix.hand;
    // Random base points: interior and boundary of the target, F-closure, outside.
    const Box bb = bounding_box(fix.omega);
    for (int i = 0; i < 6; ++i) {
      Vector x;
      do x = rng.uniform(bb.lo, bb.hi); while (!contains(fix.omega, x, 0.0));
      if (i % 2 == 1) x = euclidean_project(fix.omega, rng.uniform(vec({-4, -4}), vec({4, 4})));
      probes.push_back({x, SC::in_target, {}});
    }
    for (SC want : {SC::in_f_closure, SC::outside}) {
      for (int i = 0, tries = 0; i < 6 && tries < 10000; ++tries) {
        const Vector x = rng.uniform(vec({-5, -5}), vec({5, 5}));
        if (classify_mintime_point(fix.f, fix.omega, x) != want) continue;
        probes.push_back({x, want, {}});
        ++i;
      }
    }

    for (const auto& p : probes) {
      const SC where = classify_mintime_point(fix.f, fix.omega, p.xbar);
      cls.record(where != p.expect ? 1.0 : 0.0, p.xbar);
      const auto ci = static_cast<std::size_t>(where);

      std::vector<Vector> cands = p.members;
      cands.push_back(Vector::Zero(2));
      for (const auto& m : p.members) cands.push_back(m + 0.15 * rng.direction(2));
      for (int i = 0; i < 12; ++i) cands.push_back(rng.uniform(vec({-1.5, -1.5}), vec({1.5, 1.5})));
      for (int i = 0; i < 4; ++i) {
        const Vector u = rng.direction(2);
        const double s = support(fix.f.set(), -u).value;
        if (std::isfinite(s) && s > 0.0) cands.push_back(u / s);
      }
      if (where == SC::in_target) {
        // Members by construction: conic combinations of active normals, scaled into C*.
        const Vector slack = oh.b() - oh.A() * p.xbar;
        for (int i = 0; i < 4; ++i) {
          Vector v = Vector::Zero(2);
          for (Index r = 0; r < slack.size(); ++r) {
            if (slack(r) <= 1e-9) v += rng.uniform() * oh.A().row(r).transpose();
          }
          const double s = support(fix.f.set(), -v).value;
          if (v.norm() > 0.0 && std::isfinite(s) && s > 0.0) cands.push_back(v * (rng.uniform() / s));
        }
      }

      const auto accept = [&](const Vector& v) { return mintime_subdiff_contains(fix.f, fix.omega, p.xbar, v).member; };
      std::function<void(const Vector&, bool)> also;
      if (where == SC::outside && bounded_target) {
        also = [&](const Vector& v, bool member) {
          const bool via = mintime_subdiff_via_projection(fix.f, fix.omega, p.xbar, v);
          proj.record(via != member ? 1.0 : 0.0, concat(p.xbar, v));
        };
      }
      certify_candidates(T, p.xbar, cands, accept, shared, verts, reps[ci], stats[ci], also);
    }
  }

  for (int c = 0; c < 3; ++c) {
    std::ostringstream os;
    os << reps[c].detail << "; probes " << reps[c].samples << " (accepted " << stats[c].accepted << ", rejected "
       << stats[c].rejected << ", separated " << stats[c].separated << ")";
    reps[c].detail = os.str();
    reps[c].finalize();
    if (reps[c].samples < 100) {
      reps[c].pass = false;
      reps[c].detail += "; fewer than 100 probes";
    }
    out.reports.push_back(reps[c]);
  }
  proj.finalize();
  if (proj.samples < 100) {
    proj.pass = false;
    proj.detail += "; fewer than 100 probes";
  }
  out.reports.push_back(proj);
  out.reports.push_back(done(cls));
}

// ---------------------------------------------------------------------------
// Criterion 7

struct SignedCase {
  std::string name;
  Dynamics f;
  HPolyhedron omega;
};

std::vector<SignedCase> symmetric_cases() {
  return {{"ball_r1.box", Dynamics(fixtures::ball(1.0)), fixtures::box()},
          {"box.box", Dynamics(fixtures::box()), fixtures::box()},
          {"thin_box.triangle", Dynamics(fixtures::thin_box()), big_triangle()}};
}

// T of the closed complement: the complement is a union of open half-spaces.
double complement_time(const Dynamics& f, const HPolyhedron& omega, const Vector& x) {
  double t = kInf;
  for (Index i = 0; i < omega.num_constraints(); ++i) {
    const HPolyhedron half(Matrix(-omega.A().row(i)), vec({-omega.b()(i)}));
    t = std::min(t, eval_mintime(f, half, x).value);
  }
  return t;
}

void signed_identities(SuiteResult& out, std::uint64_t seed) {
  const std::vector<SignedCase> id_cases{{"ball_r1.box", Dynamics(fixtures::ball(1.0)), fixtures::box()},
                                         {"triangle.box", Dynamics(fixtures::triangle()), fixtures::box()},
                                         {"thin_box.triangle", Dynamics(fixtures::thin_box()), big_triangle()}};
  for (const auto& c : id_cases) {
    auto rep = start("c7.decomposition." + c.name, 1e-7, seed,
                     "|Delta - (T_Omega - T_{Omega^c})| on the 101^2 grid over [-3,3]^2");
    for (int j = 0; j <= 100; ++j) {
      for (int i = 0; i <= 100; ++i) {
        const Vector x = vec({-3.0 + 0.06 * i, -3.0 + 0.06 * j});
        const double d = eval_signed_mintime(c.f, c.omega, x).value;
        const double e = eval_mintime(c.f, c.omega, x).value - complement_time(c.f, c.omega, x);
        rep.record(std::abs(d - e), x);
      }
    }
    out.reports.push_back(done(rep));
  }

  for (const auto& c : {SignedCase{"ball_r1", Dynamics(fixtures::ball(1.0)), fixtures::box()},
                        SignedCase{"triangle", Dynamics(fixtures::triangle()), fixtures::box()}}) {
    auto rep = start("c7.region.box." + c.name, 0.0, seed,
                     "classify_region vs max(|x1|,|x2|) against 1 on the 101^2 grid; band 1e-6");
    for (int j = 0; j <= 100; ++j) {
      for (int i = 0; i <= 100; ++i) {
        const Vector x = vec({-3.0 + 0.06 * i, -3.0 + 0.06 * j});
        const double m = x.cwiseAbs().maxCoeff();
        if (std::abs(m - 1.0) <= 1e-6) continue;
        const Region want = m < 1.0 ? Region::interior : Region::exterior;
        rep.record(classify_region(c.f, c.omega, x) != want ? 1.0 : 0.0, x);
      }
    }
    // Boundary points proper.
    Rng rng(seed + 600);
    for (int k = 0; k < 200; ++k) {
      const double s = rng.uniform(-1, 1);
      const Vector x = k % 2 ? vec({s, k % 4 == 1 ? 1.0 : -1.0}) : vec({k % 4 == 0 ? 1.0 : -1.0, s});
      rep.record(classify_region(c.f, c.omega, x) != Region::boundary ? 1.0 : 0.0, x);
    }
    out.reports.push_back(done(rep));
  }

  std::uint64_t k = 700;
  for (const auto& c : symmetric_cases()) {
    auto rep = start("c7.convexity." + c.name, 1e-7, seed,
                     "Delta((x+y)/2) - (Delta(x)+Delta(y))/2 over 10^4 pairs in [-3,3]^2; witness = (x, y)");
    Rng rng(seed + k++);
    for (int i = 0; i < 10000; ++i) {
      const Vector x = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const Vector y = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const double m = eval_signed_mintime(c.f, c.omega, 0.5 * (x + y)).value;
      const double a = 0.5 * (eval_signed_mintime(c.f, c.omega, x).value + eval_signed_mintime(c.f, c.omega, y).value);
      rep.record(m - a, concat(x, y));
    }
    out.reports.push_back(done(rep));
  }

  for (const auto& c : symmetric_cases()) {
    auto rep = start("c7.infconv." + c.name, 2e-3, seed,
                     "|infconv_eval - Delta| at interior, boundary-adjacent and exterior points; 100^2 samples "
                     "over the target's box plus refinement");
    const Box bb = bounding_box(c.omega);
    SampleSpec spec{bb.lo, bb.hi, 100, 0, seed};
    Rng rng(seed + k++);
    std::vector<Vector> pts{vec({0.05, 0.02}), vec({0.3, -0.2})};
    for (int i = 0; i < 3; ++i) {
      Vector x;
      do x = rng.uniform(bb.lo, bb.hi); while (!contains(c.omega, x, 0.0));
      pts.push_back(x);
    }
    for (int i = 0; i < 4; ++i) {
      // Just inside / just outside a boundary point.
      const Vector b = euclidean_project(c.omega, rng.uniform(vec({-4, -4}), vec({4, 4})));
      const Vector n = rng.direction(2);
      pts.push_back(b + 1e-3 * n);
    }
    for (const auto& x : {vec({3, 1}), vec({-2, 2.5}), vec({0.5, -2.5}), vec({2.5, -2})}) pts.push_back(x);
    for (const auto& x : pts) {
      rep.record(std::abs(infconv_eval(c.f, c.omega, x, spec) - eval_signed_mintime(c.f, c.omega, x).value), x);
    }
    out.reports.push_back(done(rep));
  }

  {
    // Without symmetry the identity fails off the target.
    const Dynamics tri(fixtures::triangle());
    const HPolyhedron box = fixtures::box();
    const Vector x = vec({3, 0});
    SampleSpec spec{vec({-1, -1}), vec({1, 1}), 100, 0, seed};
    const ScalarFn mu = [&](const Vector& y) { return eval_mu(tri, box, y); };
    const double conv = infconv_sample(mu, tri, x, spec);
    const double delta = eval_signed_mintime(tri, box, x).value;
    auto rep = start("c7.nonsymmetric_witness", 0.0, seed, "");
    rep.record(std::max(0.0, 0.05 - (delta - conv)), x);
    std::ostringstream os;
    os << "triangle dynamics, box target, x = (3,0): Delta = " << delta << ", sampled (mu + rho_F) = " << conv
       << ", gap must exceed 0.05";
    rep.detail = os.str();
    rep.witness = x;
    out.reports.push_back(done(rep));
  }

  {
    // mu is convex iff the target is: a box passes, an L-shaped union of boxes fails.
    const Dynamics ball(fixtures::ball(1.0));
    const HPolyhedron box = fixtures::box();
    auto conv = start("c7.mu_convexity.box", 1e-7, seed, "midpoint convexity of mu over 10^4 pairs in the box");
    Rng rng(seed + k++);
    for (int i = 0; i < 10000; ++i) {
      const Vector x = rng.uniform(vec({-1, -1}), vec({1, 1}));
      const Vector y = rng.uniform(vec({-1, -1}), vec({1, 1}));
      conv.record(eval_mu(ball, box, 0.5 * (x + y)) - 0.5 * (eval_mu(ball, box, x) + eval_mu(ball, box, y)),
                  concat(x, y));
    }
    out.reports.push_back(done(conv));

    // L = [-1,1]x[-1,0] union [-1,0]x[-1,1]; mu(x) = -dist(x, complement) by grid search.
    auto in_l = [](const Vector& x) {
      const bool a = x(0) >= -1 && x(0) <= 1 && x(1) >= -1 && x(1) <= 0;
      const bool b = x(0) >= -1 && x(0) <= 0 && x(1) >= -1 && x(1) <= 1;
      return a || b;
    };
    std::vector<Vector> outside;
    for (int j = 0; j <= 200; ++j) {
      for (int i = 0; i <= 200; ++i) {
        const Vector w = vec({-2.0 + 0.02 * i, -2.0 + 0.02 * j});
        if (!in_l(w)) outside.push_back(w);
      }
    }
    auto mu_l = [&](const Vector& x) {
      if (!in_l(x)) return kInf;
      double d = kInf;
      for (const auto& w : outside) d = std::min(d, (w - x).norm());
      return -d;
    };
    const Vector a = vec({0.5, -0.5}), b = vec({-0.5, 0.5});
    const double gap = mu_l(0.5 * (a + b)) - 0.5 * (mu_l(a) + mu_l(b));
    auto wit = start("c7.mu_nonconvex_witness", 0.0, seed, "");
    wit.record(std::max(0.0, 0.1 - gap), concat(a, b));
    std::ostringstream os;
    os << "L-shaped target, ball dynamics, x = (0.5,-0.5), y = (-0.5,0.5): midpoint gap " << gap
       << " must exceed 0.1";
    wit.detail = os.str();
    wit.witness = concat(a, b);
    out.reports.push_back(done(wit));
  }
}

// ---------------------------------------------------------------------------
// Criterion 8

void sdist_cases(SuiteResult& out, std::uint64_t seed) {
  const HPolyhedron box = fixtures::box();
  const ScalarFn sd = [&](const Vector& x) { return signed_distance(box, x).value; };

  {
    auto rep = start("c8.exterior_singleton", 1e-9, seed, "box, xbar = (3,0): singleton (1,0)");
    const auto d = signed_distance_subdiff(box, vec({3, 0}));
    rep.record(d.kind() == SubdiffDescription::Kind::singleton ? 0.0 : 1.0, vec({3, 0}));
    rep.record((d.points().col(0) - vec({1, 0})).norm(), vec({3, 0}));
    out.reports.push_back(done(rep));
  }
  {
    auto rep = start("c8.interior_polytope", 1e-9, seed, "box, xbar = (0,0): polytope with vertices +-e1, +-e2");
    const auto d = signed_distance_subdiff(box, vec({0, 0}));
    rep.record(d.kind() == SubdiffDescription::Kind::polytope ? 0.0 : 1.0, vec({0, 0}));
    rep.record(d.points().cols() == 4 ? 0.0 : 1.0, vec({0, 0}));
    for (const auto& e : {vec({1, 0}), vec({-1, 0}), vec({0, 1}), vec({0, -1})}) {
      double best = kInf;
      for (Index j = 0; j < d.points().cols(); ++j) best = std::min(best, (d.points().col(j) - e).norm());
      rep.record(best, e);
    }
    out.reports.push_back(done(rep));
  }
  {
    const Vector corner = vec({1, 1});
    const auto d = signed_distance_subdiff(box, corner);
    auto kind = start("c8.corner_membership", 0.0, seed,
                      "box, xbar = (1,1): cone_sphere_hull accepting (sqrt2/2, sqrt2/2) and rejecting (0.4,0.4)");
    kind.record(d.kind() == SubdiffDescription::Kind::cone_sphere_hull ? 0.0 : 1.0, corner);
    kind.record(d.membership(vec({std::sqrt(0.5), std::sqrt(0.5)})) ? 0.0 : 1.0, vec({std::sqrt(0.5), std::sqrt(0.5)}));
    kind.record(d.membership(vec({0.4, 0.4})) ? 1.0 : 0.0, vec({0.4, 0.4}));
    out.reports.push_back(done(kind));

    auto sup = start("c8.corner_support_vs_fd", 1e-3, seed,
                     "|support of co(S and N)(d) - dirderiv_fd(signed distance, (1,1), d)| in 16 directions");
    for (const auto& dir : unit_directions(16)) {
      sup.record(std::abs(d.support(dir) - dirderiv_fd(sd, corner, dir).value), dir);
    }
    out.reports.push_back(done(sup));
  }
  {
    auto rep = start("c8.reverse_normal", 0.0, seed,
                     "w - x in N(w; Omega) for every foot w of 1000 interior probes (box and triangle)");
    Rng rng(seed + 800);
    const std::vector<HPolyhedron> targets{box, big_triangle()};
    for (int i = 0; i < 1000; ++i) {
      const HPolyhedron& om = targets[static_cast<std::size_t>(i % 2)];
      const Box bb = bounding_box(om);
      Vector x;
      do x = rng.uniform(bb.lo, bb.hi); while (signed_distance(om, x).region != Region::interior);
      for (const auto& w : q_set(om, x)) rep.record(reverse_normal_check(om, x, w) ? 0.0 : 1.0, concat(x, w));
    }
    out.reports.push_back(done(rep));
  }
  {
    auto rep = start("c8.subgradient_soundness", 1e-7, seed,
                     "membership of the exact description vs the subgradient inequality of the signed distance; "
                     "witness = (xbar, v)");
    ProbeStats stats;
    Rng rng(seed + 801);
    std::vector<Vector> shared;
    for (int i = 0; i < 300; ++i) shared.push_back(rng.uniform(vec({-4, -4}), vec({4, 4})));
    const std::vector<Vector> verts{vec({1, 1}), vec({-1, 1}), vec({1, -1}), vec({-1, -1})};
    for (const auto& xbar : {vec({3, 0}), vec({3, 3}), vec({-2, 0.5}), vec({0, 0}), vec({0.5, 0}), vec({0.2, 0.2}),
                             vec({1, 1}), vec({1, 0.3}), vec({-1, -1})}) {
      const auto desc = signed_distance_subdiff(box, xbar);
      std::vector<Vector> cands{Vector::Zero(2)};
      for (int i = 0; i < 20; ++i) cands.push_back(rng.uniform(vec({-1.5, -1.5}), vec({1.5, 1.5})));
      if (desc.kind() != SubdiffDescription::Kind::cone_sphere_hull) {
        for (Index j = 0; j < desc.points().cols(); ++j) cands.push_back(desc.points().col(j));
      } else {
        // Points of the arc hull: convex combinations of unit vectors of the cone.
        for (int i = 0; i < 6; ++i) {
          const Vector g = desc.generators() * rng.uniform(vec({0, 0}), vec({1, 1})).head(desc.generators().cols());
          if (g.norm() > 0.0) cands.push_back(rng.uniform() * g.normalized());
        }
      }
      const auto accept = [&](const Vector& v) { return desc.membership(v, 1e-7); };
      certify_candidates(sd, xbar, cands, accept, shared, verts, rep, stats);
    }
    std::ostringstream os;
    os << rep.detail << "; probes " << rep.samples << " (accepted " << stats.accepted << ", rejected "
       << stats.rejected << ", separated " << stats.separated << ")";
    rep.detail = os.str();
    out.reports.push_back(done(rep));
  }
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  SuiteResult out;
  out.suite = name;
  if (name == "gauge") {
    gauge_oracle(out, seed);
  } else if (name == "mintime") {
    mintime_oracle(out, seed);
    continuity(out, seed);
    f_closure(out, seed);
    expansion(out, seed);
    subdiff_agreement(out, seed);
  } else if (name == "signed") {
    signed_identities(out, seed);
  } else if (name == "sdist") {
    sdist_cases(out, seed);
  } else {
    throw ValidationError("unknown suite \"" + name + "\" (expected gauge, mintime, signed, sdist or all)");
  }
  return out;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  if (which == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, seed));
  } else {
    out.push_back(run_suite(which, seed));
  }
  return out;
}

}  // namespace mtf
