#ifndef MTF_FIXTURES_HPP
#define MTF_FIXTURES_HPP

// Small named sets shared by the verification suites and the tests.

#include "mtf/geometry.hpp"

#include <initializer_list>

namespace mtf::fixtures {

inline Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

/// Columns from a list of points.
inline Matrix cols(std::initializer_list<std::initializer_list<double>> pts) {
  const Index n = static_cast<Index>(pts.begin()->size());
  Matrix m(n, static_cast<Index>(pts.size()));
  Index j = 0;
  for (const auto& p : pts) m.col(j++) = vec(p);
  return m;
}

/// [-s, s]^n.
inline HPolyhedron box(Index n = 2, double s = 1.0) {
  Matrix A(2 * n, n);
  A << Matrix::Identity(n, n), -Matrix::Identity(n, n);
  return HPolyhedron(A, Vector::Constant(2 * n, s));
}

/// Box [lo, hi] (componentwise).
inline HPolyhedron box(const Vector& lo, const Vector& hi) {
  const Index n = lo.size();
  Matrix A(2 * n, n);
  A << Matrix::Identity(n, n), -Matrix::Identity(n, n);
  Vector b(2 * n);
  b << hi, -lo;
  return HPolyhedron(A, b);
}

inline Ball ball(double r = 1.0, Index n = 2) { return Ball(Vector::Zero(n), r); }

/// {x1 <= 1, |x2| <= 1}: unbounded in -e1.
inline HPolyhedron slab() {
  Matrix A(3, 2);
  A << 1, 0, 0, 1, 0, -1;
  return HPolyhedron(A, Vector::Ones(3));
}

/// co{(2,0), (0,2), (-1,-1)}: not symmetric.
inline VPolytope triangle() { return VPolytope(cols({{2, 0}, {0, 2}, {-1, -1}})); }

/// {|2 x1| <= 1, |x2| <= 1}.
inline HPolyhedron thin_box() {
  Matrix A(4, 2);
  A << 2, 0, -2, 0, 0, 1, 0, -1;
  return HPolyhedron(A, Vector::Ones(4));
}

/// The origin as a V-polytope.
inline VPolytope origin(Index n = 2) { return VPolytope(Matrix::Zero(n, 1)); }

}  // namespace mtf::fixtures

#endif  // MTF_FIXTURES_HPP
