#include "doctest.h"

#include "mtf/fixtures.hpp"
#include "mtf/mintime.hpp"
#include "mtf/oracle.hpp"

#include <cmath>

using namespace mtf;
using fixtures::cols;
using fixtures::vec;

namespace {

const Dynamics& unit_ball() {
  static const Dynamics f(fixtures::ball(1.0));
  return f;
}

}  // namespace

TEST_CASE("eval_mintime: examples") {
  const ConvexSet box = fixtures::box();
  auto r = eval_mintime(unit_ball(), box, vec({3, 1}));
  CHECK(r.value == doctest::Approx(2.0));
  CHECK(r.attained);
  CHECK((*r.target - vec({1, 1})).norm() < 1e-9);
  CHECK((*r.velocity - vec({-1, 0})).norm() < 1e-9);

  r = eval_mintime(unit_ball(), box, vec({0.5, -0.2}));
  CHECK(r.value == 0.0);
  CHECK(*r.target == vec({0.5, -0.2}));

  r = eval_mintime(Dynamics(fixtures::slab()), fixtures::origin(), vec({5, 0}));
  CHECK(r.value == 0.0);
  CHECK_FALSE(r.attained);
  CHECK_FALSE(r.velocity.has_value());

  r = eval_mintime(Dynamics(fixtures::box()), box, vec({3, 1}));
  CHECK(r.value == doctest::Approx(2.0));
  CHECK(gauge(Dynamics(fixtures::box()), *r.target - vec({3, 1})).value == doctest::Approx(2.0));
}

TEST_CASE("eval_mintime: every representation pair agrees with brute force") {
  const std::vector<Dynamics> dyn{Dynamics(fixtures::box()), Dynamics(fixtures::ball(2.0)),
                                  Dynamics(fixtures::triangle()), Dynamics(fixtures::thin_box())};
  const std::vector<ConvexSet> targets{fixtures::box(vec({1, 0}), vec({2, 1})),
                                       VPolytope(cols({{0, 1}, {1, 2}, {-1, 2}})),
                                       Ball(vec({-1, -2}), 0.5)};
  SampleSpec spec;
  spec.resolution = 81;
  Rng rng(17);
  for (const auto& f : dyn) {
    for (const auto& om : targets) {
      for (int k = 0; k < 5; ++k) {
        const Vector x = rng.uniform(vec({-3, -3}), vec({3, 3}));
        const auto r = eval_mintime(f, om, x);
        const double oracle = mintime_bruteforce(f, om, x, spec);
        CHECK(r.value <= oracle + 1e-9);
        CHECK(r.value >= oracle - 0.1);
        if (r.value > 0.0) {
          REQUIRE(r.target);
          CHECK(contains(om, *r.target, 1e-7));
          CHECK(gauge(f, *r.target - x).value == doctest::Approx(r.value).epsilon(1e-7));
        }
      }
    }
  }
}

TEST_CASE("eval_mintime: off-centre ball dynamics are unsupported") {
  CHECK_THROWS_AS(eval_mintime(Dynamics(Ball(vec({0.2, 0}), 1.0)), fixtures::box(), vec({3, 0})), UnsupportedError);
}

TEST_CASE("F-closure") {
  const Dynamics slab(fixtures::slab());
  const ConvexSet o = fixtures::origin();
  CHECK(in_f_closure(slab, o, vec({5, 0})));
  CHECK_FALSE(in_f_closure(slab, o, vec({-5, 0})));
  CHECK(in_f_closure(slab, o, vec({0, 0})));

  const VPolytope c = f_closure_explicit(slab, fixtures::origin());
  CHECK(contains(c, vec({5, 0})));
  CHECK_FALSE(contains(c, vec({-5, 0})));
  CHECK_FALSE(contains(c, vec({5, 0.1})));

  const VPolytope strip = f_closure_explicit(slab, VPolytope(cols({{0, 0}, {0, 1}})));
  CHECK(contains(strip, vec({7, 0.5})));
  CHECK_FALSE(contains(strip, vec({7, 1.5})));
  CHECK_FALSE(contains(strip, vec({-0.1, 0.5})));

  const VPolytope same = f_closure_explicit(unit_ball(), VPolytope(cols({{0, 0}, {0, 1}})));
  CHECK(same.rays().cols() == 0);
  CHECK_THROWS_AS(f_closure_explicit(slab, VPolytope(cols({{0, 0}}), cols({{1, 0}}))), ValidationError);
}

TEST_CASE("generalized projection") {
  auto p = generalized_projection(unit_ball(), fixtures::box(), vec({3, 0}));
  REQUIRE(p.size() == 1);
  CHECK((p[0] - vec({1, 0})).norm() < 1e-9);

  p = generalized_projection(Dynamics(fixtures::box()), VPolytope(cols({{0, 0}, {1, 0}})), vec({3, 0}));
  REQUIRE(p.size() == 1);
  CHECK((p[0] - vec({1, 0})).norm() < 1e-7);

  p = generalized_projection(unit_ball(), fixtures::box(), vec({0.2, 0.3}));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == vec({0.2, 0.3}));

  // Box dynamics from (3, 0): every w = (1, y) with |y| <= 1 is optimal.
  p = generalized_projection(Dynamics(fixtures::box()), fixtures::box(), vec({3, 0}));
  CHECK(p.size() >= 3);
  for (const auto& w : p) CHECK(std::abs(w(0) - 1.0) < 1e-7);

  CHECK_THROWS_AS(generalized_projection(unit_ball(), fixtures::slab(), vec({3, 0})), ValidationError);
}

TEST_CASE("expansion support") {
  const ExpansionHandle h(fixtures::box(), unit_ball(), 2.0);
  CHECK(expansion_support(h, vec({1, 0})) == doctest::Approx(3.0));
  CHECK(expansion_support(h, vec({0, 0})) == 0.0);
  const ExpansionHandle s(fixtures::box(), Dynamics(fixtures::slab()), 2.0);
  CHECK(expansion_support(s, vec({-1, 0})) == doctest::Approx(3.0));
  CHECK(expansion_support(s, vec({1, 0})) == kInf);
  CHECK_THROWS_AS(ExpansionHandle(fixtures::box(), unit_ball(), 0.0), ValidationError);
}

TEST_CASE("subdifferential: theorem cases") {
  const ConvexSet box = fixtures::box();
  auto r = mintime_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({0.5, 0}));
  CHECK(r.where == SubdiffCase::in_target);
  CHECK(r.member);
  CHECK_FALSE(mintime_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({1.5, 0})).member);
  CHECK_FALSE(mintime_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({0, 0.1})).member);

  r = mintime_subdiff_contains(unit_ball(), box, vec({3, 0}), vec({1, 0}));
  CHECK(r.where == SubdiffCase::outside);
  CHECK(r.member);
  CHECK(mintime_subdiff_via_projection(unit_ball(), box, vec({3, 0}), vec({1, 0})));
  CHECK_FALSE(mintime_subdiff_via_projection(unit_ball(), box, vec({3, 0}), vec({0, 1})));
  CHECK_FALSE(mintime_subdiff_via_projection(unit_ball(), box, vec({3, 0}), vec({2, 0})));

  CHECK(mintime_subdiff_contains(unit_ball(), box, vec({0.2, 0.1}), vec({0, 0})).member);
  CHECK_FALSE(mintime_subdiff_contains(unit_ball(), box, vec({0.2, 0.1}), vec({0.01, 0})).member);

  // Slab dynamics, target {0}: (5, 0) lies in the F-closure; dT = {v : v1 <= 0, |v2| + ... }.
  const Dynamics slab(fixtures::slab());
  r = mintime_subdiff_contains(slab, fixtures::origin(), vec({5, 0}), vec({0, 0.5}));
  CHECK(r.where == SubdiffCase::in_f_closure);
  CHECK(r.member);
  CHECK_FALSE(mintime_subdiff_contains(slab, fixtures::origin(), vec({5, 0}), vec({-0.5, 0})).member);
  CHECK_FALSE(mintime_subdiff_contains(slab, fixtures::origin(), vec({5, 0}), vec({0, 1.5})).member);
  CHECK_THROWS_AS(mintime_subdiff_via_projection(unit_ball(), box, vec({1, 0}), vec({1, 0})), ValidationError);
}

TEST_CASE("subdifferential: in-target and in-closure formulas agree on the overlap") {
  const Dynamics slab(fixtures::slab());
  const ConvexSet seg = VPolytope(cols({{0, 0}, {0, 1}}));
  Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const Vector v = rng.uniform(vec({-2, -2}), vec({2, 2}));
    const Vector xbar = vec({0, rng.uniform()});
    const bool a = mintime_subdiff_contains(slab, seg, xbar, v).member;
    const bool b = support(f_closure_explicit(slab, *seg.as<VPolytope>()), v).value <= v.dot(xbar) + 1e-7 &&
                   cstar_contains(slab, v);
    CHECK(a == b);
  }
}

TEST_CASE("shift inequality, convexity and continuity estimate") {
  const std::vector<Dynamics> dyn{Dynamics(fixtures::box()), Dynamics(fixtures::triangle()), unit_ball(),
                                  Dynamics(fixtures::slab())};
  const ConvexSet om = VPolytope(cols({{0, 1}, {1, 2}, {-1, 2}}));
  Rng rng(12);
  for (const auto& f : dyn) {
    for (int k = 0; k < 100; ++k) {
      const Vector x = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const Vector u = rng.uniform(vec({-3, -3}), vec({3, 3}));
      Vector dir;
      do dir = rng.uniform(vec({-2, -2}), vec({2, 2})); while (!contains(f.set(), dir, 0.0));
      CHECK(shift_inequality_check(f, om, x, dir, rng.uniform(0, 3)));
      const double tx = eval_mintime(f, om, x).value, tu = eval_mintime(f, om, u).value;
      const double lam = rng.uniform();
      CHECK(eval_mintime(f, om, lam * x + (1 - lam) * u).value <= lam * tx + (1 - lam) * tu + 1e-7);
      const double bound = std::max(gauge(f, u - x).value, gauge(f, x - u).value);
      CHECK(std::abs(tx - tu) <= bound + 1e-7);
    }
  }
}
