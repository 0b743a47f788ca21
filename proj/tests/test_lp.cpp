#include "doctest.h"

#include "mtf/fixtures.hpp"
#include "mtf/lp.hpp"
#include "mtf/oracle.hpp"

using namespace mtf;
using fixtures::vec;

namespace {

LinearProgram box_lp(const Vector& c) {
  LinearProgram lp(2);
  lp.c = c;
  const auto b = fixtures::box();
  for (Index i = 0; i < b.num_constraints(); ++i) lp.add_inequality(b.A().row(i).transpose(), b.b()(i));
  return lp;
}

}  // namespace

TEST_CASE("simplex: box corner") {
  const auto sol = solve_lp(box_lp(vec({-1, -1})));
  REQUIRE(sol.optimal());
  CHECK(sol.value == doctest::Approx(-2.0));
  CHECK(sol.x(0) == doctest::Approx(1.0));
  CHECK(sol.x(1) == doctest::Approx(1.0));
}

TEST_CASE("simplex: contradictory bounds are infeasible") {
  LinearProgram lp(1);
  lp.add_inequality(vec({1}), -1.0);
  lp.add_inequality(vec({-1}), -1.0);
  CHECK(solve_lp(lp).status == LPStatus::infeasible);
}

TEST_CASE("simplex: free descent is unbounded with a ray") {
  LinearProgram lp(1);
  lp.c = vec({-1});
  lp.set_nonnegative();
  const auto sol = solve_lp(lp);
  CHECK(sol.status == LPStatus::unbounded);
  REQUIRE(sol.ray.size() == 1);
  CHECK(sol.ray(0) > 0.0);
}

TEST_CASE("simplex: equalities, lower bounds and degenerate vertices") {
  // min x + 2y + 3z  s.t. x + y + z = 1, x - y = 0, all >= 0  ->  x = y = 0.5
  LinearProgram lp(3);
  lp.c = vec({1, 2, 3});
  lp.set_nonnegative();
  lp.add_equality(vec({1, 1, 1}), 1.0);
  lp.add_equality(vec({1, -1, 0}), 0.0);
  const auto sol = solve_lp(lp);
  REQUIRE(sol.optimal());
  CHECK(sol.value == doctest::Approx(1.5));

  // Redundant degenerate constraints through the optimum.
  LinearProgram d(2);
  d.c = vec({-1, -1});
  d.add_inequality(vec({1, 0}), 1.0);
  d.add_inequality(vec({0, 1}), 1.0);
  d.add_inequality(vec({1, 1}), 2.0);
  d.add_inequality(vec({2, 1}), 3.0);
  d.add_inequality(vec({1, 2}), 3.0);
  d.lower = {-5.0, -5.0};
  const auto ds = solve_lp(d);
  REQUIRE(ds.optimal());
  CHECK(ds.value == doctest::Approx(-2.0));
}

TEST_CASE("simplex: optimum is not beaten by sampled feasible points") {
  Rng rng(kDefaultSeed);
  const auto box = fixtures::box(2, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix A(6, 2);
    Vector b(6);
    A.topRows(4) = box.A();
    b.head(4) = box.b();
    for (Index i = 4; i < 6; ++i) {
      A.row(i) = rng.direction(2).transpose();
      b(i) = rng.uniform(0.1, 1.0);
    }
    const Vector c = rng.direction(2);
    LinearProgram lp(2);
    lp.c = c;
    for (Index i = 0; i < 6; ++i) lp.add_inequality(A.row(i).transpose(), b(i));
    const auto sol = solve_lp(lp);
    REQUIRE(sol.optimal());
    CHECK(((A * sol.x - b).maxCoeff()) <= 1e-7);
    CHECK(c.dot(sol.x) == doctest::Approx(sol.value).epsilon(1e-9));
    double best = kInf;
    for (int k = 0; k < 10000; ++k) {
      const Vector x = rng.uniform(vec({-1, -1}), vec({1, 1}));
      if ((A * x - b).maxCoeff() <= 0.0) best = std::min(best, c.dot(x));
    }
    CHECK(sol.value <= best + 1e-12);
    CHECK(sol.value >= best - 1e-1);
  }
}

TEST_CASE("project_qp: clamping and hyperplane") {
  const auto box = fixtures::box();
  Vector p = project_qp(box.A(), box.b(), vec({3, 1}));
  CHECK(p(0) == doctest::Approx(1.0));
  CHECK(p(1) == doctest::Approx(1.0));

  p = project_qp(box.A(), box.b(), vec({0.3, -0.2}));
  CHECK(p(0) == 0.3);
  CHECK(p(1) == -0.2);

  Matrix A(1, 2);
  A << 1, 0;
  p = project_qp(A, vec({0}), vec({2, 5}));
  CHECK(p(0) == doctest::Approx(0.0));
  CHECK(p(1) == doctest::Approx(5.0));
}

TEST_CASE("project_qp: variational inequality on random polygons") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix A(5, 2);
    Vector b(5);
    for (Index i = 0; i < 5; ++i) {
      A.row(i) = rng.direction(2).transpose();
      b(i) = rng.uniform(0.2, 1.5);
    }
    const Vector x = rng.uniform(vec({-4, -4}), vec({4, 4}));
    const Vector p = project_qp(A, b, x);
    CHECK((A * p - b).maxCoeff() <= 1e-9);
    for (int k = 0; k < 1000; ++k) {
      const Vector w = rng.uniform(vec({-3, -3}), vec({3, 3}));
      if ((A * w - b).maxCoeff() > 0.0) continue;
      CHECK((x - p).dot(w - p) <= 1e-7);
    }
  }
}

TEST_CASE("project_qp_hull: vertices and rays") {
  const Matrix V = fixtures::cols({{0, 0}, {1, 0}, {0, 1}});
  Vector p = project_qp_hull(V, Matrix(2, 0), vec({1, 1}));
  CHECK(p(0) == doctest::Approx(0.5));
  CHECK(p(1) == doctest::Approx(0.5));
  for (Index j = 0; j < V.cols(); ++j) CHECK((vec({1, 1}) - p).dot(V.col(j) - p) <= 1e-7);

  // {(0,0)} + cone{(-1,0)}: projection of (-5, 2) is (-5, 0).
  p = project_qp_hull(fixtures::cols({{0, 0}}), fixtures::cols({{-1, 0}}), vec({-5, 2}));
  CHECK(p(0) == doctest::Approx(-5.0));
  CHECK(p(1) == doctest::Approx(0.0));
}

TEST_CASE("project_qp: scale caps") {
  CHECK_THROWS_AS(project_qp(Matrix::Identity(9, 9), Vector::Ones(9), Vector::Zero(9)), UnsupportedError);
}
