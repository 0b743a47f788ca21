#include "doctest.h"

#include "mtf/fixtures.hpp"
#include "mtf/gauge.hpp"
#include "mtf/oracle.hpp"

#include <cmath>

using namespace mtf;
using fixtures::vec;

namespace {

std::vector<Dynamics> family() {
  return {Dynamics(fixtures::box()), Dynamics(fixtures::ball(1.0)), Dynamics(fixtures::ball(2.0)),
          Dynamics(fixtures::triangle()), Dynamics(fixtures::slab()), Dynamics(fixtures::thin_box())};
}

}  // namespace

TEST_CASE("gauge: closed forms") {
  const Dynamics box(fixtures::box());
  const auto g = gauge(box, vec({3, -2}));
  CHECK(g.value == doctest::Approx(3.0));
  CHECK(g.witness == GaugeWitness::active);
  REQUIRE(g.active_rows.size() == 1);
  CHECK(g.active_rows[0] == 0);
  CHECK((g.point - vec({1, -2.0 / 3.0})).norm() < 1e-12);

  CHECK(gauge(box, vec({0, 0})).value == 0.0);
  CHECK(gauge(box, vec({0, 0})).witness == GaugeWitness::origin);

  const auto s = gauge(Dynamics(fixtures::slab()), vec({-7, 0}));
  CHECK(s.value == 0.0);
  CHECK(s.witness == GaugeWitness::horizon);

  CHECK(gauge(Dynamics(fixtures::ball(2.0)), vec({3, 4})).value == doctest::Approx(2.5));
  // Triangle: (2,0) is a vertex, (-2,0) needs t with (-2/t, 0) on the edge x - 3y = ... => t = 3.
  CHECK(gauge(Dynamics(fixtures::triangle()), vec({2, 0})).value == doctest::Approx(1.0));
  CHECK(gauge(Dynamics(fixtures::triangle()), vec({-2, 0})).value == doctest::Approx(3.0));
  // Off-centre ball {|x - (0.5, 0)| <= 1}: (1.5, 0) is on the boundary, (-0.5, 0) too.
  const Dynamics off(Ball(vec({0.5, 0}), 1.0));
  CHECK(gauge(off, vec({1.5, 0})).value == doctest::Approx(1.0));
  CHECK(gauge(off, vec({-0.5, 0})).value == doctest::Approx(1.0));
  CHECK(gauge(off, vec({-1.0, 0})).value == doctest::Approx(2.0));
}

TEST_CASE("gauge: agrees with bisection") {
  Rng rng(kDefaultSeed);
  for (const auto& f : family()) {
    for (int k = 0; k < 300; ++k) {
      const Vector x = rng.uniform(vec({-5, -5}), vec({5, 5}));
      CHECK(std::abs(gauge(f, x).value - gauge_bisect(f, x)) <= 1e-8);
    }
  }
}

TEST_CASE("gauge: homogeneity, subadditivity, Lipschitz") {
  Rng rng(2);
  for (const auto& f : family()) {
    const double L = gauge_continuity_modulus(f);
    for (int k = 0; k < 300; ++k) {
      const Vector x = rng.uniform(vec({-5, -5}), vec({5, 5}));
      const Vector y = rng.uniform(vec({-5, -5}), vec({5, 5}));
      const double lam = rng.uniform(0.01, 20.0);
      const double gx = gauge(f, x).value, gy = gauge(f, y).value;
      CHECK(gauge(f, lam * x).value == doctest::Approx(lam * gx).epsilon(1e-9));
      CHECK(gauge(f, x + y).value <= gx + gy + 1e-9);
      CHECK(std::abs(gx - gy) <= L * (x - y).norm() + 1e-9);
    }
  }
}

TEST_CASE("gauge subdifferential") {
  const Dynamics box(fixtures::box());
  CHECK(gauge_subdiff_contains(box, vec({3, -2}), vec({1, 0})));
  CHECK_FALSE(gauge_subdiff_contains(box, vec({3, -2}), vec({0, -1})));
  CHECK(gauge_subdiff_contains(box, vec({0, 0}), vec({0.5, -0.5})));
  CHECK_FALSE(gauge_subdiff_contains(box, vec({0, 0}), vec({0.8, -0.5})));

  // Accepted subgradients satisfy the subgradient inequality.
  Rng rng(4);
  for (const auto& f : family()) {
    for (int k = 0; k < 40; ++k) {
      const Vector x = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const Vector v = rng.uniform(vec({-1.5, -1.5}), vec({1.5, 1.5}));
      if (!gauge_subdiff_contains(f, x, v)) continue;
      const double gx = gauge(f, x).value;
      for (int j = 0; j < 1000; ++j) {
        const Vector y = rng.uniform(vec({-6, -6}), vec({6, 6}));
        CHECK(gauge(f, y).value >= gx + v.dot(y - x) - 1e-7);
      }
    }
    // Subgradients at a generic point, from the active witness, are always accepted.
    const Vector x = vec({1.3, -0.7});
    const auto g = gauge(f, x);
    if (g.witness != GaugeWitness::active) continue;
    const auto* h = f.set().as<HPolyhedron>();
    if (!h) continue;
    for (Index i : g.active_rows) CHECK(gauge_subdiff_contains(f, x, h->A().row(i).transpose() / h->b()(i)));
  }
}

TEST_CASE("C* and S*") {
  const Dynamics ball(fixtures::ball(1.0));
  const Dynamics box(fixtures::box());
  CHECK(cstar_contains(ball, vec({0.5, 0.5})));
  CHECK(cstar_contains(box, vec({0, 0})));
  CHECK_FALSE(cstar_contains(box, vec({1.2, 0})));
  CHECK(sstar_contains(ball, vec({1, 0})));
  CHECK_FALSE(sstar_contains(ball, vec({0.5, 0})));
  // sigma_box((-1,-1)) = 2.
  CHECK_FALSE(sstar_contains(box, vec({1, 1})));
  CHECK(sstar_contains(box, vec({0.5, 0.5})));
  // Slab: sigma_F(-v) infinite whenever v1 > 0.
  CHECK_FALSE(cstar_contains(Dynamics(fixtures::slab()), vec({0.1, 0})));
  CHECK(cstar_contains(Dynamics(fixtures::slab()), vec({-0.5, 0.5})));
}

TEST_CASE("continuity modulus") {
  CHECK(gauge_continuity_modulus(Dynamics(fixtures::ball(2.0))) == doctest::Approx(0.5));
  CHECK(gauge_continuity_modulus(Dynamics(fixtures::box())) == doctest::Approx(1.0));
  CHECK(gauge_continuity_modulus(Dynamics(fixtures::thin_box())) == doctest::Approx(2.0));
}
