#include "mtf/signed.hpp"

#include "mtf/mintime.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace mtf {

const char* to_string(Region r) {
  switch (r) {
    case Region::interior: return "interior";
    case Region::boundary: return "boundary";
    case Region::exterior: return "exterior";
  }
  return "unknown";
}

const char* to_string(SubdiffDescription::Kind k) {
  switch (k) {
    case SubdiffDescription::Kind::singleton: return "singleton";
    case SubdiffDescription::Kind::polytope: return "polytope";
    case SubdiffDescription::Kind::cone_sphere_hull: return "cone_sphere_hull";
  }
  return "unknown";
}

namespace {

void check_target(const HPolyhedron& omega, const Vector& x, const char* who) {
  require_dim(omega.dim(), x.size(), who);
  if (omega.num_constraints() == 0) {
    throw ValidationError(std::string(who) + ": target must be a proper subset (at least one constraint)");
  }
}

void check_signed(const Dynamics& f, const HPolyhedron& omega, const Vector& x, const char* who) {
  check_target(omega, x, who);
  require_dim(omega.dim(), f.dim(), who);
  if (!is_bounded(f.set())) throw ValidationError(std::string(who) + ": dynamics must be bounded");
}

// Row index and value of min_i max(0, slack_i / sigma_F(a_i)).
std::pair<Index, double> nearest_complement_facet(const Dynamics& f, const HPolyhedron& omega, const Vector& x) {
  Index best_i = 0;
  double best = kInf;
  for (Index i = 0; i < omega.num_constraints(); ++i) {
    const Vector a = omega.A().row(i).transpose();
    const double slack = omega.b()(i) - a.dot(x);
    const double t = std::max(0.0, slack / support(f.set(), a).value);
    if (t < best) {
      best = t;
      best_i = i;
    }
  }
  return {best_i, best};
}

}  // namespace

double complement_mintime(const Dynamics& f, const HPolyhedron& omega, const Vector& x) {
  check_signed(f, omega, x, "complement_mintime");
  return nearest_complement_facet(f, omega, x).second;
}

double eval_mu(const Dynamics& f, const HPolyhedron& omega, const Vector& x) {
  check_signed(f, omega, x, "eval_mu");
  if (!contains(omega, x, 0.0)) return kInf;
  return -nearest_complement_facet(f, omega, x).second;
}

SignedValue eval_signed_mintime(const Dynamics& f, const HPolyhedron& omega, const Vector& x) {
  check_signed(f, omega, x, "eval_signed_mintime");
  SignedValue out;
  out.witness = x;
  if (!contains(omega, x, 0.0)) {
    const auto r = eval_mintime(f, omega, x);
    if (r.value <= kBoundaryTol) return out;
    out.value = r.value;
    out.region = Region::exterior;
    out.witness = *r.target;
    return out;
  }
  const auto [i, t] = nearest_complement_facet(f, omega, x);
  if (t <= kBoundaryTol) return out;
  out.value = -t;
  out.region = Region::interior;
  out.witness = x + t * *support(f.set(), omega.A().row(i).transpose()).argmax;
  return out;
}

Region classify_region(const Dynamics& f, const HPolyhedron& omega, const Vector& x, double tol) {
  const double v = eval_signed_mintime(f, omega, x).value;
  if (v < -tol) return Region::interior;
  if (v > tol) return Region::exterior;
  return Region::boundary;
}

double infconv_eval(const Dynamics& f, const HPolyhedron& omega, const Vector& x, const SampleSpec& spec) {
  check_signed(f, omega, x, "infconv_eval");
  if (!contains(omega, x, 0.0) && !is_symmetric(f)) {
    throw UnsupportedError("infconv_eval: exterior points need symmetric dynamics");
  }
  Vector sigma(omega.num_constraints());
  for (Index i = 0; i < sigma.size(); ++i) sigma(i) = support(f.set(), omega.A().row(i).transpose()).value;
  const ScalarFn mu = [&](const Vector& y) {
    const Vector slack = omega.b() - omega.A() * y;
    if (slack.minCoeff() < 0.0) return kInf;
    return -slack.cwiseQuotient(sigma).minCoeff();
  };
  return infconv_sample(mu, f, x, spec);
}

SampleSpec default_infconv_spec(const HPolyhedron& omega, const Vector& x) {
  const Index n = x.size();
  SampleSpec spec;
  spec.resolution = std::max(3, static_cast<int>(std::lround(std::pow(1e4, 1.0 / static_cast<double>(n)))));
  if (is_bounded(omega)) {
    const Box box = bounding_box(omega);
    spec.lo = box.lo;
    spec.hi = box.hi;
  } else {
    const double r = 1.0 + 2.0 * (x - euclidean_project(omega, x)).norm();
    spec.lo = x.array() - r;
    spec.hi = x.array() + r;
  }
  return spec;
}

std::vector<Vector> mu_probe_points(const HPolyhedron& omega, const Vector& xbar) {
  const Index n = xbar.size();
  std::vector<Vector> raw;
  std::vector<Vector> verts;
  if (n <= kMaxConversionDim) {
    const VPolytope v = to_vertices(omega);
    for (Index j = 0; j < v.vertices().cols(); ++j) {
      verts.push_back(v.vertices().col(j));
      for (Index k = 0; k < v.rays().cols(); ++k) {
        for (double s : {1.0, 10.0}) raw.push_back(v.vertices().col(j) + s * v.rays().col(k));
      }
    }
  }
  for (const auto& w : verts) {
    raw.push_back(w);
    raw.push_back(0.5 * (w + xbar));
  }
  for (Index i = 0; i < omega.num_constraints(); ++i) {
    const Vector a = omega.A().row(i).transpose().normalized();
    for (double h : {1e-3, 1e-2, 0.1, 1.0}) raw.push_back(xbar - h * a);
  }
  for (auto& p : axis_probes(xbar)) raw.push_back(std::move(p));

  Vector lo, hi;
  if (is_bounded(omega)) {
    const Box box = bounding_box(omega);
    lo = box.lo;
    hi = box.hi;
  } else {
    const double r = 2.0 + xbar.cwiseAbs().maxCoeff();
    lo = xbar.array() - r;
    hi = xbar.array() + r;
  }
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 512; ++k) {
    const Vector y = rng.uniform(lo, hi);
    raw.push_back(y);
    for (Index i = 0; i < omega.num_constraints(); ++i) {
      const Vector a = omega.A().row(i).transpose();
      raw.push_back(y + ((omega.b()(i) - a.dot(y)) / a.squaredNorm()) * a);
    }
  }

  std::vector<Vector> out;
  for (auto& p : raw) {
    if (contains(omega, p, 0.0)) out.push_back(std::move(p));
  }
  return out;
}

bool mu_subdiff_contains(const Dynamics& f, const HPolyhedron& omega, const Vector& xbar, const Vector& v,
                         double tol) {
  check_signed(f, omega, xbar, "mu_subdiff_contains");
  require_dim(xbar.size(), v.size(), "mu_subdiff_contains");
  if (!is_symmetric(f)) throw ValidationError("mu_subdiff_contains: dynamics must be symmetric");
  const Vector slack = (omega.b() - omega.A() * xbar).cwiseQuotient(omega.A().rowwise().norm());
  if (slack.minCoeff() < -kBoundaryTol || slack.minCoeff() > kBoundaryTol) {
    throw ValidationError("mu_subdiff_contains: base point must lie on the boundary of the target");
  }
  Vector sigma(omega.num_constraints());
  for (Index i = 0; i < sigma.size(); ++i) sigma(i) = support(f.set(), omega.A().row(i).transpose()).value;
  // Probes lie in Omega, so mu(y) = -min_i slack_i / sigma_i there; mu(xbar) = 0.
  for (const auto& y : mu_probe_points(omega, xbar)) {
    const double mu = -(omega.b() - omega.A() * y).cwiseQuotient(sigma).cwiseMax(0.0).minCoeff();
    if (v.dot(y - xbar) > mu + tol) return false;
  }
  return true;
}

bool delta_subdiff_contains(const Dynamics& f, const HPolyhedron& omega, const Vector& xbar, const Vector& v,
                            double tol) {
  if (!mu_subdiff_contains(f, omega, xbar, v, tol)) return false;
  return support(f.set(), v).value <= 1.0 + tol;
}

SignedValue signed_distance(const HPolyhedron& omega, const Vector& x) {
  return eval_signed_mintime(Dynamics(Ball(Vector::Zero(x.size()), 1.0)), omega, x);
}

std::vector<Vector> q_set(const HPolyhedron& omega, const Vector& x) {
  check_target(omega, x, "q_set");
  const auto sd = signed_distance(omega, x);
  if (sd.region == Region::boundary) throw ValidationError("q_set: undefined on the boundary");
  if (sd.region == Region::exterior) return {euclidean_project(omega, x)};

  const Vector norms = omega.A().rowwise().norm();
  const Vector slack = (omega.b() - omega.A() * x).cwiseQuotient(norms);
  const double smin = slack.minCoeff();
  std::vector<Vector> out;
  for (Index i = 0; i < slack.size(); ++i) {
    if (slack(i) > smin + 1e-9) continue;
    const Vector a = omega.A().row(i).transpose();
    const Vector foot = x + ((omega.b()(i) - a.dot(x)) / a.squaredNorm()) * a;
    bool dup = false;
    for (const auto& q : out) dup = dup || (q - foot).norm() <= 1e-9;
    if (!dup) out.push_back(foot);
  }
  return out;
}

namespace {

Matrix unit_generators(const PolyhedralCone& cone) {
  if (cone.dim() > kMaxConversionDim) {
    throw UnsupportedError("cone_sphere_support: dimension " + std::to_string(cone.dim()) + " exceeds 4");
  }
  const Matrix g = cone.generators();
  Matrix out(cone.dim(), 0);
  for (Index j = 0; j < g.cols(); ++j) {
    const double nrm = g.col(j).norm();
    if (nrm <= 1e-12) continue;
    const Vector u = g.col(j) / nrm;
    bool dup = false;
    for (Index k = 0; k < out.cols(); ++k) dup = dup || (out.col(k) - u).norm() <= 1e-12;
    if (dup) continue;
    out.conservativeResize(Eigen::NoChange, out.cols() + 1);
    out.col(out.cols() - 1) = u;
  }
  if (out.cols() == 0) throw ValidationError("cone_sphere_support: the cone is {0}; S and N do not meet");
  if (out.cols() > 16) throw UnsupportedError("cone_sphere_support: more than 16 generators");
  return out;
}

double sphere_support_unit(const Matrix& gens, const Vector& d) {
  const Index n = gens.rows();
  const Index k = gens.cols();
  const auto cone = PolyhedralCone::from_generators(gens);
  double best = -kInf;
  for (Index j = 0; j < k; ++j) best = std::max(best, d.dot(gens.col(j)));
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    Matrix g(n, 0);
    for (Index j = 0; j < k; ++j) {
      if (mask & (1ul << j)) {
        g.conservativeResize(Eigen::NoChange, g.cols() + 1);
        g.col(g.cols() - 1) = gens.col(j);
      }
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(g);
    const Index r = qr.rank();
    const Matrix q = Matrix(qr.householderQ()).leftCols(r);
    const Vector p = q * (q.transpose() * d);
    const double pn = p.norm();
    if (pn <= 1e-12 || pn <= best) continue;
    if (cone.contains(p / pn, 1e-9)) best = pn;
  }
  return best;
}

}  // namespace

double cone_sphere_support(const PolyhedralCone& cone, const Vector& d) {
  require_dim(cone.dim(), d.size(), "cone_sphere_support");
  return sphere_support_unit(unit_generators(cone), d);
}

SubdiffDescription SubdiffDescription::singleton(Vector p) {
  Matrix m(p.size(), 1);
  m.col(0) = p;
  return SubdiffDescription(Kind::singleton, std::move(m));
}

SubdiffDescription SubdiffDescription::polytope(Matrix vertices) {
  if (vertices.cols() == 0) throw ValidationError("SubdiffDescription: polytope needs a vertex");
  return SubdiffDescription(Kind::polytope, std::move(vertices));
}

SubdiffDescription SubdiffDescription::cone_sphere_hull(const PolyhedralCone& cone) {
  return SubdiffDescription(Kind::cone_sphere_hull, unit_generators(cone));
}

double SubdiffDescription::support(const Vector& d) const {
  require_dim(points_.rows(), d.size(), "SubdiffDescription::support");
  if (kind_ == Kind::cone_sphere_hull) return sphere_support_unit(points_, d);
  return (d.transpose() * points_).maxCoeff();
}

bool SubdiffDescription::membership(const Vector& v, double tol) const {
  require_dim(points_.rows(), v.size(), "SubdiffDescription::membership");
  switch (kind_) {
    case Kind::singleton: return (v - points_.col(0)).norm() <= tol;
    case Kind::polytope: return contains(VPolytope(points_), v, tol);
    case Kind::cone_sphere_hull:
      if (v.norm() > 1.0 + tol) return false;
      return points_.rows() <= 2 ? arc_membership(v, tol) : separation_membership(v, tol);
  }
  return false;
}

// Exact test in one and two dimensions. In the plane S and N is an arc of
// width theta (or a pair of antipodal points when N is a line), and the hull
// of an arc is the circular segment {|u| <= 1, <u, bisector> >= cos(theta/2)}.
bool SubdiffDescription::arc_membership(const Vector& v, double tol) const {
  const Index k = points_.cols();
  if (points_.rows() == 1) {
    bool pos = false, neg = false;
    for (Index j = 0; j < k; ++j) (points_(0, j) > 0.0 ? pos : neg) = true;
    const double lo = neg ? -1.0 : 1.0;
    const double hi = pos ? 1.0 : -1.0;
    return v(0) >= lo - tol && v(0) <= hi + tol;
  }
  auto cross = [](const Vector& a, const Vector& b) { return a(0) * b(1) - a(1) * b(0); };
  const Vector g0 = points_.col(0);
  bool collinear = true, opposite = false;
  for (Index j = 1; j < k; ++j) {
    collinear = collinear && std::abs(cross(g0, points_.col(j))) <= 1e-12;
    opposite = opposite || g0.dot(points_.col(j)) < 0.0;
  }
  if (collinear && opposite) return std::abs(cross(g0, v)) <= tol;

  std::vector<double> ang;
  for (Index j = 0; j < k; ++j) ang.push_back(std::atan2(points_(1, j), points_(0, j)));
  std::sort(ang.begin(), ang.end());
  const double two_pi = 2.0 * std::numbers::pi;
  double gap = -1.0, start = ang.front();
  for (std::size_t j = 0; j < ang.size(); ++j) {
    const double next = j + 1 < ang.size() ? ang[j + 1] : ang.front() + two_pi;
    if (next - ang[j] > gap) {
      gap = next - ang[j];
      start = next;
    }
  }
  if (gap < std::numbers::pi - 1e-12) return true;  // N is the whole plane
  const double theta = two_pi - gap;
  const double phi = start + 0.5 * theta;
  const Vector n{{std::cos(phi), std::sin(phi)}};
  return v.dot(n) >= std::cos(0.5 * theta) - tol;
}

// Three and four dimensions: look for a direction d with <v, d> above the
// exact support. Candidates are the generators, v itself and 1000 seeded
// random directions.
bool SubdiffDescription::separation_membership(const Vector& v, double tol) const {
  const Index n = points_.rows();
  std::vector<Vector> dirs;
  for (Index j = 0; j < points_.cols(); ++j) dirs.push_back(points_.col(j));
  if (v.norm() > 0.0) dirs.push_back(v.normalized());
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 1000; ++k) dirs.push_back(rng.direction(n));
  for (const auto& d : dirs) {
    if (v.dot(d) > sphere_support_unit(points_, d) + tol) return false;
  }
  return true;
}

SubdiffDescription signed_distance_subdiff(const HPolyhedron& omega, const Vector& xbar) {
  check_target(omega, xbar, "signed_distance_subdiff");
  const auto sd = signed_distance(omega, xbar);
  if (sd.region == Region::exterior) {
    return SubdiffDescription::singleton((xbar - euclidean_project(omega, xbar)) / sd.value);
  }
  if (sd.region == Region::interior) {
    const auto qs = q_set(omega, xbar);
    Matrix verts(xbar.size(), static_cast<Index>(qs.size()));
    for (std::size_t j = 0; j < qs.size(); ++j) verts.col(static_cast<Index>(j)) = (xbar - qs[j]) / sd.value;
    return SubdiffDescription::polytope(std::move(verts));
  }
  if (xbar.size() > kMaxConversionDim) {
    throw UnsupportedError("signed_distance_subdiff: boundary case is limited to n <= 4");
  }
  const double tol = 2.0 * kBoundaryTol * omega.A().rowwise().norm().maxCoeff();
  return SubdiffDescription::cone_sphere_hull(normal_cone(omega, xbar, tol));
}

bool reverse_normal_check(const ConvexSet& omega, const Vector& xbar, const Vector& wbar, double tol) {
  require_dim(omega.dim(), xbar.size(), "reverse_normal_check");
  return normal_cone_contains(omega, wbar, wbar - xbar, tol).member;
}

}  // namespace mtf
