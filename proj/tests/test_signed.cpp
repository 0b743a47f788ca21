#include "doctest.h"

#include "mtf/fixtures.hpp"
#include "mtf/mintime.hpp"
#include "mtf/signed.hpp"

#include <cmath>
#include <numbers>

using namespace mtf;
using fixtures::cols;
using fixtures::vec;

namespace {

const Dynamics& unit_ball() {
  static const Dynamics f(fixtures::ball(1.0));
  return f;
}

}  // namespace

TEST_CASE("mu and signed minimal time: examples") {
  const HPolyhedron box = fixtures::box();
  CHECK(eval_mu(unit_ball(), box, vec({0.2, 0})) == doctest::Approx(-0.8));
  CHECK(eval_mu(unit_ball(), box, vec({3, 1})) == kInf);
  CHECK(eval_mu(unit_ball(), box, vec({1, 0.3})) == 0.0);

  auto s = eval_signed_mintime(unit_ball(), box, vec({3, 1}));
  CHECK(s.value == doctest::Approx(2.0));
  CHECK(s.region == Region::exterior);
  CHECK((s.witness - vec({1, 1})).norm() < 1e-9);

  s = eval_signed_mintime(unit_ball(), box, vec({0.2, 0}));
  CHECK(s.value == doctest::Approx(-0.8));
  CHECK(s.region == Region::interior);
  CHECK((s.witness - vec({1, 0})).norm() < 1e-12);

  s = eval_signed_mintime(unit_ball(), box, vec({1, 0.5}));
  CHECK(s.value == 0.0);
  CHECK(s.region == Region::boundary);
  CHECK(eval_signed_mintime(unit_ball(), box, vec({1, 1})).region == Region::boundary);

  CHECK(eval_signed_mintime(Dynamics(fixtures::box()), box, vec({3, 1})).value == doctest::Approx(2.0));

  CHECK(classify_region(unit_ball(), box, vec({0, 0})) == Region::interior);
  CHECK(classify_region(unit_ball(), box, vec({1, 0})) == Region::boundary);
  CHECK(classify_region(unit_ball(), box, vec({3, 1})) == Region::exterior);
}

TEST_CASE("signed routines reject unbounded dynamics and improper targets") {
  CHECK_THROWS_AS(eval_mu(Dynamics(fixtures::slab()), fixtures::box(), vec({0, 0})), ValidationError);
  CHECK_THROWS_AS(eval_signed_mintime(unit_ball(), HPolyhedron(Matrix(0, 2), Vector(0)), vec({0, 0})),
                  ValidationError);
}

TEST_CASE("Delta = T_Omega - T_complement, with the complement as a union of half-spaces") {
  const HPolyhedron tri = to_halfspaces(VPolytope(cols({{-1, -1}, {2, -1}, {0, 2}})));
  const Dynamics f(fixtures::triangle());
  for (double x = -2.5; x <= 2.5; x += 0.25) {
    for (double y = -2.5; y <= 2.5; y += 0.25) {
      const Vector p = vec({x, y});
      double tc = kInf;
      for (Index i = 0; i < tri.num_constraints(); ++i) {
        Matrix a = -tri.A().row(i);
        const HPolyhedron half(a, vec({-tri.b()(i)}));
        tc = std::min(tc, eval_mintime(f, half, p).value);
      }
      const double d = eval_mintime(f, tri, p).value - tc;
      CHECK(eval_signed_mintime(f, tri, p).value == doctest::Approx(d).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("signed minimal time is Lipschitz with the polar norm") {
  const HPolyhedron box = fixtures::box();
  Rng rng(21);
  for (const Dynamics& f : {unit_ball(), Dynamics(fixtures::triangle()), Dynamics(fixtures::thin_box())}) {
    const double L = polar_norm(f);
    for (int k = 0; k < 500; ++k) {
      const Vector x = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const Vector y = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const double dx = eval_signed_mintime(f, box, x).value, dy = eval_signed_mintime(f, box, y).value;
      CHECK(std::abs(dx - dy) <= L * (x - y).norm() + 1e-7);
    }
  }
}

TEST_CASE("signed minimal time is convex for symmetric dynamics") {
  const HPolyhedron box = fixtures::box();
  Rng rng(22);
  for (const Dynamics& f : {unit_ball(), Dynamics(fixtures::box()), Dynamics(fixtures::thin_box())}) {
    for (int k = 0; k < 500; ++k) {
      const Vector x = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const Vector y = rng.uniform(vec({-3, -3}), vec({3, 3}));
      const double dx = eval_signed_mintime(f, box, x).value, dy = eval_signed_mintime(f, box, y).value;
      CHECK(eval_signed_mintime(f, box, 0.5 * (x + y)).value <= 0.5 * (dx + dy) + 1e-7);
    }
  }
  // Without symmetry convexity can fail. From (-3,-1) the vertex (2,0) of the
  // triangle reaches the box at t = 1; (-0.5,-0.5) is 0.5 from the complement;
  // the midpoint (-1.75,-0.75) needs t = rho((0.75,0)) = 0.375 > (1 - 0.5) / 2.
  const Dynamics tri(fixtures::triangle());
  CHECK(eval_signed_mintime(tri, box, vec({-3, -1})).value == doctest::Approx(1.0));
  CHECK(eval_signed_mintime(tri, box, vec({-0.5, -0.5})).value == doctest::Approx(-0.5));
  CHECK(eval_signed_mintime(tri, box, vec({-1.75, -0.75})).value == doctest::Approx(0.375));
}

TEST_CASE("infimal convolution") {
  const HPolyhedron box = fixtures::box();
  SampleSpec spec;
  spec.lo = vec({-1, -1});
  spec.hi = vec({1, 1});
  spec.resolution = 100;
  CHECK(infconv_eval(Dynamics(fixtures::box()), box, vec({3, 1}), spec) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(infconv_eval(unit_ball(), box, vec({0, 0}), spec) == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(infconv_eval(unit_ball(), box, vec({0.3, 0.1}), spec) <= eval_mu(unit_ball(), box, vec({0.3, 0.1})));
  CHECK_THROWS_AS(infconv_eval(Dynamics(fixtures::triangle()), box, vec({3, 0}), spec), UnsupportedError);
  // On Omega the identity holds without symmetry.
  const Dynamics tri(fixtures::triangle());
  CHECK(std::abs(infconv_eval(tri, box, vec({0.3, -0.4}), spec) -
                 eval_signed_mintime(tri, box, vec({0.3, -0.4})).value) <= 2e-3);
}

TEST_CASE("mu and Delta subdifferentials at boundary points") {
  const HPolyhedron box = fixtures::box();
  CHECK(mu_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({1, 0})));
  CHECK_FALSE(mu_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({-1, 0})));
  CHECK_FALSE(mu_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({0, 0})));
  CHECK(delta_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({1, 0})));
  CHECK_FALSE(delta_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({2, 0})));
  CHECK_FALSE(delta_subdiff_contains(unit_ball(), box, vec({1, 0}), vec({0, 1})));
  CHECK(delta_subdiff_contains(unit_ball(), box, vec({1, 1}), vec({std::sqrt(0.5), std::sqrt(0.5)})));
  CHECK_FALSE(delta_subdiff_contains(unit_ball(), box, vec({1, 1}), vec({-1, 2})));
  CHECK_THROWS_AS(mu_subdiff_contains(unit_ball(), box, vec({0, 0}), vec({1, 0})), ValidationError);
  CHECK_THROWS_AS(mu_subdiff_contains(Dynamics(fixtures::triangle()), box, vec({1, 0}), vec({1, 0})),
                  ValidationError);
}

TEST_CASE("signed distance and Q sets") {
  const HPolyhedron box = fixtures::box();
  CHECK(signed_distance(box, vec({3, 1})).value == doctest::Approx(2.0));
  CHECK(signed_distance(box, vec({0, 0})).value == doctest::Approx(-1.0));
  CHECK(signed_distance(box, vec({1, 0})).value == 0.0);

  CHECK(q_set(box, vec({0, 0})).size() == 4);
  auto q = q_set(box, vec({0.5, 0}));
  REQUIRE(q.size() == 1);
  CHECK((q[0] - vec({1, 0})).norm() < 1e-12);
  q = q_set(box, vec({3, 1}));
  REQUIRE(q.size() == 1);
  CHECK((q[0] - vec({1, 1})).norm() < 1e-9);
  CHECK_THROWS_AS(q_set(box, vec({1, 0.2})), ValidationError);
}

TEST_CASE("cone sphere support") {
  const auto quad = PolyhedralCone::from_generators(cols({{1, 0}, {0, 1}}));
  CHECK(cone_sphere_support(quad, vec({1, 1})) == doctest::Approx(std::sqrt(2.0)));
  CHECK(cone_sphere_support(quad, vec({-1, -2})) == doctest::Approx(-1.0));
  CHECK(cone_sphere_support(PolyhedralCone::from_generators(cols({{1, 0}})), vec({1, 0})) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cone_sphere_support(PolyhedralCone::from_generators(Matrix(2, 0)), vec({1, 0})), ValidationError);

  // Against a fine sweep of the arc.
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Vector d = rng.uniform(vec({-2, -2}), vec({2, 2}));
    double best = -kInf;
    for (int j = 0; j <= 20000; ++j) {
      const double t = 0.5 * std::numbers::pi * j / 20000.0;
      best = std::max(best, d(0) * std::cos(t) + d(1) * std::sin(t));
    }
    CHECK(cone_sphere_support(quad, d) == doctest::Approx(best).epsilon(1e-8));
  }
  // 3D octant against sampled unit vectors.
  const auto oct = PolyhedralCone::from_generators(Matrix::Identity(3, 3));
  for (int k = 0; k < 20; ++k) {
    const Vector d = rng.direction(3);
    double best = -kInf;
    for (int j = 0; j < 20000; ++j) best = std::max(best, d.dot(rng.direction(3).cwiseAbs()));
    const double s = cone_sphere_support(oct, d);
    CHECK(s >= best - 1e-12);
    CHECK(s <= best + 5e-2);
  }
}

TEST_CASE("signed distance subdifferential: three cases") {
  const HPolyhedron box = fixtures::box();
  auto d = signed_distance_subdiff(box, vec({3, 0}));
  CHECK(d.kind() == SubdiffDescription::Kind::singleton);
  CHECK((d.points().col(0) - vec({1, 0})).norm() < 1e-9);

  d = signed_distance_subdiff(box, vec({0, 0}));
  CHECK(d.kind() == SubdiffDescription::Kind::polytope);
  CHECK(d.points().cols() == 4);
  CHECK(d.membership(vec({0.5, 0.5})));
  CHECK_FALSE(d.membership(vec({0.6, 0.6})));
  CHECK(d.support(vec({1, 1})) == doctest::Approx(1.0));

  d = signed_distance_subdiff(box, vec({1, 1}));
  CHECK(d.kind() == SubdiffDescription::Kind::cone_sphere_hull);
  CHECK(d.membership(vec({std::sqrt(0.5), std::sqrt(0.5)})));
  CHECK_FALSE(d.membership(vec({0.4, 0.4})));
  CHECK(d.membership(vec({1, 0})));
  CHECK_FALSE(d.membership(vec({-0.1, 1})));

  // Smooth boundary point: the unit normal only.
  d = signed_distance_subdiff(box, vec({1, 0.2}));
  CHECK(d.membership(vec({1, 0})));
  CHECK_FALSE(d.membership(vec({0.9, 0})));
  CHECK_FALSE(d.membership(vec({1, 0.1})));
}

TEST_CASE("cone sphere hull membership in 1, 3 and special planar cones") {
  // Line normal cone: Omega = {x2 = 0}.
  Matrix A(2, 2);
  A << 0, 1, 0, -1;
  const HPolyhedron line(A, vec({0, 0}));
  auto d = signed_distance_subdiff(line, vec({0.3, 0}));
  CHECK(d.membership(vec({0, 0.5})));
  CHECK(d.membership(vec({0, -1})));
  CHECK_FALSE(d.membership(vec({0.2, 0})));

  // Point target: N = R^2, hull of the circle = unit disk.
  const HPolyhedron pt = fixtures::box(vec({0, 0}), vec({0, 0}));
  d = signed_distance_subdiff(pt, vec({0, 0}));
  CHECK(d.membership(vec({0.3, -0.7})));
  CHECK_FALSE(d.membership(vec({0.8, -0.7})));

  // 1D interval endpoint.
  d = signed_distance_subdiff(fixtures::box(1), vec({1}));
  CHECK(d.membership(vec({1})));
  CHECK_FALSE(d.membership(vec({0.5})));

  // 3D cube corner: hull of the spherical triangle in the positive octant.
  d = signed_distance_subdiff(fixtures::box(3), vec({1, 1, 1}));
  CHECK(d.kind() == SubdiffDescription::Kind::cone_sphere_hull);
  CHECK(d.membership(Vector::Ones(3) / std::sqrt(3.0)));
  CHECK(d.membership(vec({1, 0, 0})));
  CHECK(d.membership(vec({0.6, 0.6, 0.1})));
  CHECK_FALSE(d.membership(vec({0.3, 0.3, 0.3})));
  CHECK_FALSE(d.membership(vec({0.5, 0.5, -0.1})));
  CHECK_THROWS_AS(signed_distance_subdiff(fixtures::box(5), Vector::Ones(5)), UnsupportedError);
}

TEST_CASE("reverse normal") {
  const HPolyhedron box = fixtures::box();
  CHECK(reverse_normal_check(box, vec({0, 0}), vec({1, 0})));
  CHECK(reverse_normal_check(box, vec({0.5, 0.2}), vec({1, 0.2})));
  Rng rng(4);
  const HPolyhedron tri = to_halfspaces(VPolytope(cols({{-1, -1}, {2, -1}, {0, 2}})));
  for (int k = 0; k < 300; ++k) {
    const Vector x = rng.uniform(vec({-1, -1}), vec({2, 2}));
    if (signed_distance(tri, x).region != Region::interior) continue;
    for (const auto& w : q_set(tri, x)) CHECK(reverse_normal_check(tri, x, w));
  }
}
