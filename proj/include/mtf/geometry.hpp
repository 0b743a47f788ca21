#ifndef MTF_GEOMETRY_HPP
#define MTF_GEOMETRY_HPP

#include "mtf/common.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <variant>

namespace mtf {

/// {x : A x <= b}. Rows are nonzero and the set is nonempty.
class HPolyhedron {
public:
  HPolyhedron(Matrix A, Vector b);

  const Matrix& A() const { return A_; }
  const Vector& b() const { return b_; }
  Index dim() const { return A_.cols(); }
  Index num_constraints() const { return A_.rows(); }

private:
  Matrix A_;
  Vector b_;
};

/// co(vertices) + cone(rays); points are stored as columns.
class VPolytope {
public:
  VPolytope(Matrix vertices, Matrix rays);
  explicit VPolytope(Matrix vertices);

  const Matrix& vertices() const { return vertices_; }
  const Matrix& rays() const { return rays_; }
  Index dim() const { return vertices_.rows(); }
  bool bounded() const { return rays_.cols() == 0; }

private:
  Matrix vertices_;
  Matrix rays_;
};

class Ball {
public:
  Ball(Vector center, double radius);

  const Vector& center() const { return center_; }
  double radius() const { return radius_; }
  Index dim() const { return center_.size(); }

private:
  Vector center_;
  double radius_;
};

/// A closed convex subset of R^n in one of three representations.
class ConvexSet {
public:
  using Payload = std::variant<HPolyhedron, VPolytope, Ball>;

  ConvexSet(HPolyhedron h) : payload_(std::move(h)) {}
  ConvexSet(VPolytope v) : payload_(std::move(v)) {}
  ConvexSet(Ball b) : payload_(std::move(b)) {}

  Index dim() const;
  const Payload& payload() const { return payload_; }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&payload_);
  }

  /// "hpoly", "vpoly" or "ball".
  const char* kind() const;

private:
  Payload payload_;
};

/// {x : A x <= 0} or cone(generators).
class PolyhedralCone {
public:
  static PolyhedralCone from_halfspaces(Matrix A);
  static PolyhedralCone from_generators(Matrix rays);

  Index dim() const { return dim_; }
  bool has_generators() const { return generator_form_; }
  const Matrix& halfspaces() const { return data_; }

  /// Generators (columns). H-form cones are converted, n <= 4 only.
  Matrix generators() const;

  bool contains(const Vector& x, double tol = kMembershipTol) const;
  /// 0 or +inf.
  double support(const Vector& d) const;
  bool is_zero() const;

private:
  PolyhedralCone(Matrix data, Index dim, bool generator_form)
      : data_(std::move(data)), dim_(dim), generator_form_(generator_form) {}

  Matrix data_;
  Index dim_;
  bool generator_form_;
};

/// Dynamics set F: a ConvexSet validated to contain the origin in its interior.
class Dynamics {
public:
  explicit Dynamics(ConvexSet set);

  const ConvexSet& set() const { return set_; }
  Index dim() const { return set_.dim(); }

private:
  ConvexSet set_;
};

struct SupportValue {
  double value = -kInf;
  std::optional<Vector> argmax;

  bool finite() const { return std::isfinite(value); }
};

/// Membership verdict with a reason when it is negative for a structural cause.
struct Verdict {
  bool member = false;
  std::string diagnostic;

  explicit operator bool() const { return member; }
};

bool contains(const ConvexSet& s, const Vector& x, double tol = kMembershipTol);

SupportValue support(const ConvexSet& s, const Vector& d);

/// v in N(xbar; S), decided by sigma_S(v) <= <v, xbar> + tol.
Verdict normal_cone_contains(const ConvexSet& s, const Vector& xbar, const Vector& v,
                             double tol = kMembershipTol);

/// Normal cone of an H-polyhedron at xbar as cone(active rows).
PolyhedralCone normal_cone(const HPolyhedron& s, const Vector& xbar, double tol = kMembershipTol);

PolyhedralCone horizon_cone(const ConvexSet& s);

ConvexSet polar(const Dynamics& f);

/// sup{ ||v|| : v in F° }.
double polar_norm(const Dynamics& f);

Vector euclidean_project(const ConvexSet& s, const Vector& x);

bool is_bounded(const ConvexSet& s);

/// Vertex / ray enumeration of an H-polyhedron (n <= 4).
VPolytope to_vertices(const HPolyhedron& h);

/// Facet enumeration of a V-polytope (n <= 4).
HPolyhedron to_halfspaces(const VPolytope& v);

/// H-form view of a polyhedral set; balls are rejected.
HPolyhedron as_hpolyhedron(const ConvexSet& s);
/// V-form view of a polyhedral set; balls are rejected.
VPolytope as_vpolytope(const ConvexSet& s);

/// P + Q for V-form sets.
VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);
/// lambda * P for V-form sets (lambda may be negative).
VPolytope scaled(const VPolytope& p, double lambda);

struct Box {
  Vector lo;
  Vector hi;
};

/// Axis-aligned bounding box of a bounded set.
Box bounding_box(const ConvexSet& s);

/// F = -F, decided on vertices (V-form, converted H-form) or center (ball).
bool is_symmetric(const Dynamics& f, double tol = kMembershipTol);

}  // namespace mtf

#endif  // MTF_GEOMETRY_HPP
