#ifndef MTF_SIGNED_HPP
#define MTF_SIGNED_HPP

#include "mtf/geometry.hpp"
#include "mtf/oracle.hpp"

#include <vector>

namespace mtf {

// Signed minimal time Delta(x) = T_Omega(x) outside Omega and -T_{Omega^c}(x)
// inside, with mu = +inf outside and -T_{Omega^c} inside. Omega is an
// H-polyhedron with at least one row; F must be bounded.

/// |Delta| <= this is reported as the boundary with value 0.
inline constexpr double kBoundaryTol = 1e-7;

enum class Region { interior, boundary, exterior };

const char* to_string(Region r);

struct SignedValue {
  double value = 0.0;
  Region region = Region::boundary;
  Vector witness;  // exterior: target point; interior: foot on the nearest complement facet; boundary: x
};

/// T_{Omega^c}(x) for x in Omega: min_i max(0, (b_i - <a_i, x>) / sigma_F(a_i)).
double complement_mintime(const Dynamics& f, const HPolyhedron& omega, const Vector& x);

double eval_mu(const Dynamics& f, const HPolyhedron& omega, const Vector& x);

SignedValue eval_signed_mintime(const Dynamics& f, const HPolyhedron& omega, const Vector& x);

Region classify_region(const Dynamics& f, const HPolyhedron& omega, const Vector& x, double tol = kBoundaryTol);

/// (mu (+) rho_F)(x) by sampling. Exterior x needs symmetric F.
double infconv_eval(const Dynamics& f, const HPolyhedron& omega, const Vector& x, const SampleSpec& spec);

/// Sampling box used by infconv_eval when the caller has no preference:
/// the bounding box of a bounded Omega, else a box around x; 100 x 100 grid in 2D.
SampleSpec default_infconv_spec(const HPolyhedron& omega, const Vector& x);

/// Points of Omega at which the subgradient inequality of mu is checked:
/// vertices, facet feet, inward offsets from xbar, axis probes and seeded random points.
std::vector<Vector> mu_probe_points(const HPolyhedron& omega, const Vector& xbar);

/// v in d mu(xbar) at a boundary point, certified by the subgradient inequality on
/// mu_probe_points. A pass is a necessary condition at sampler resolution.
bool mu_subdiff_contains(const Dynamics& f, const HPolyhedron& omega, const Vector& xbar, const Vector& v,
                         double tol = kMembershipTol);

/// d Delta(xbar) = d mu(xbar) intersected with F°.
bool delta_subdiff_contains(const Dynamics& f, const HPolyhedron& omega, const Vector& xbar, const Vector& v,
                            double tol = kMembershipTol);

/// Signed Euclidean distance (F = closed unit ball).
SignedValue signed_distance(const HPolyhedron& omega, const Vector& x);

/// Exterior: the projection onto Omega. Interior: feet of the facets of minimal slack.
std::vector<Vector> q_set(const HPolyhedron& omega, const Vector& x);

/// max <d, u> over unit vectors u of a nonzero polyhedral cone (n <= 4).
double cone_sphere_support(const PolyhedralCone& cone, const Vector& d);

/// Exact description of the subdifferential of the signed distance at a point.
class SubdiffDescription {
public:
  enum class Kind { singleton, polytope, cone_sphere_hull };

  static SubdiffDescription singleton(Vector p);
  static SubdiffDescription polytope(Matrix vertices);
  /// co(S and N) for the unit sphere S; the cone is stored in generator form.
  static SubdiffDescription cone_sphere_hull(const PolyhedralCone& cone);

  Kind kind() const { return kind_; }
  /// Singleton point (one column) or polytope vertices.
  const Matrix& points() const { return points_; }
  /// Generators of the cone (cone_sphere_hull only).
  const Matrix& generators() const { return points_; }

  bool membership(const Vector& v, double tol = 1e-6) const;
  double support(const Vector& d) const;

private:
  SubdiffDescription(Kind k, Matrix pts) : kind_(k), points_(std::move(pts)) {}

  bool arc_membership(const Vector& v, double tol) const;
  bool separation_membership(const Vector& v, double tol) const;

  Kind kind_;
  Matrix points_;
};

const char* to_string(SubdiffDescription::Kind k);

SubdiffDescription signed_distance_subdiff(const HPolyhedron& omega, const Vector& xbar);

/// wbar - xbar in N(wbar; Omega) for an interior xbar and a foot point wbar.
bool reverse_normal_check(const ConvexSet& omega, const Vector& xbar, const Vector& wbar,
                          double tol = kMembershipTol);

}  // namespace mtf

#endif  // MTF_SIGNED_HPP
