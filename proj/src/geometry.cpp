#include "mtf/geometry.hpp"

#include "mtf/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace mtf {

namespace {

constexpr double kZeroRow = 1e-14;
constexpr double kDedupTol = 1e-9;

bool all_finite(const Matrix& m) { return m.allFinite(); }

void check_conversion_dim(Index n, const char* who) {
  if (n > kMaxConversionDim) {
    throw UnsupportedError(std::string(who) + ": H/V conversion only supported for n <= 4 (got n = " +
                           std::to_string(n) + ")");
  }
}

// Appends v as a new column unless an existing column lies within tol (max-norm).
void append_unique(Matrix& cols, const Vector& v, double tol) {
  for (Index j = 0; j < cols.cols(); ++j) {
    if ((cols.col(j) - v).cwiseAbs().maxCoeff() <= tol) return;
  }
  cols.conservativeResize(v.size(), cols.cols() + 1);
  cols.col(cols.cols() - 1) = v;
}

// Orthonormal basis of the null space of M (columns).
Matrix kernel(const Matrix& M, Index n) {
  if (M.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double thresh = 1e-10 * std::max(1.0, s.size() > 0 ? s(0) : 0.0);
  Index rank = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > thresh) ++rank;
  }
  return svd.matrixV().rightCols(n - rank);
}

Index rank_of(const Matrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(M);
  lu.setThreshold(1e-10);
  return lu.rank();
}

bool for_each_subset(Index m, Index k, const std::function<void(const std::vector<Index>&)>& fn) {
  if (k > m || k < 0) return false;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), Index{0});
  while (true) {
    fn(idx);
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

Matrix select_rows(const Matrix& A, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), A.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = A.row(rows[i]);
  return out;
}

// Minimal L1 residual of x = V lambda + R mu, sum lambda = 1, lambda, mu >= 0.
// With V empty the affine constraint is dropped (pure cone).
double hull_residual(const Matrix& V, const Matrix& R, const Vector& x) {
  const Index n = x.size();
  const Index nv = V.cols();
  const Index nr = R.cols();
  LinearProgram lp(nv + nr + 2 * n);
  lp.set_nonnegative();
  lp.c.tail(2 * n).setOnes();
  for (Index i = 0; i < n; ++i) {
    Vector row = Vector::Zero(lp.num_vars());
    if (nv > 0) row.head(nv) = V.row(i).transpose();
    if (nr > 0) row.segment(nv, nr) = R.row(i).transpose();
    row(nv + nr + i) = 1.0;
    row(nv + nr + n + i) = -1.0;
    lp.add_equality(row, x(i));
  }
  if (nv > 0) {
    Vector row = Vector::Zero(lp.num_vars());
    row.head(nv).setOnes();
    lp.add_equality(row, 1.0);
  }
  const auto sol = solve_lp(lp);
  if (!sol.optimal()) throw Error("hull membership LP failed: " + std::string(to_string(sol.status)));
  return std::max(0.0, sol.value);
}

// max d.x over {A x <= b}.
LPSolution maximize_over(const Matrix& A, const Vector& b, const Vector& d) {
  LinearProgram lp(d.size());
  lp.c = -d;
  lp.A = A;
  lp.b = b;
  auto sol = solve_lp(lp);
  if (sol.status == LPStatus::iteration_limit) throw Error("support LP hit the iteration cap");
  return sol;
}

bool ray_unbounded(const Matrix& R, const Vector& d) {
  for (Index j = 0; j < R.cols(); ++j) {
    if (d.dot(R.col(j)) > 1e-12 * std::max(1.0, d.norm() * R.col(j).norm())) return true;
  }
  return false;
}

}  // namespace

HPolyhedron::HPolyhedron(Matrix A, Vector b) : A_(std::move(A)), b_(std::move(b)) {
  if (A_.cols() < 1) throw ValidationError("hpoly: dimension must be at least 1");
  require_dim(A_.rows(), b_.size(), "hpoly: b");
  if (!all_finite(A_) || !all_finite(b_)) throw ValidationError("hpoly: non-finite entries");
  for (Index i = 0; i < A_.rows(); ++i) {
    if (A_.row(i).norm() <= kZeroRow) {
      throw ValidationError("hpoly: row " + std::to_string(i) + " of A is zero");
    }
  }
  if (A_.rows() > 0) {
    LinearProgram lp(A_.cols());
    lp.A = A_;
    lp.b = b_;
    const auto sol = solve_lp(lp);
    if (sol.status == LPStatus::infeasible) throw ValidationError("hpoly: the set {x : Ax <= b} is empty");
    if (sol.status == LPStatus::iteration_limit) throw Error("hpoly: feasibility LP hit the iteration cap");
  }
}

VPolytope::VPolytope(Matrix vertices, Matrix rays) {
  if (vertices.cols() < 1) throw ValidationError("vpoly: at least one vertex is required");
  if (vertices.rows() < 1) throw ValidationError("vpoly: dimension must be at least 1");
  if (rays.cols() == 0) rays.resize(vertices.rows(), 0);
  require_dim(vertices.rows(), rays.rows(), "vpoly: rays");
  if (!all_finite(vertices) || !all_finite(rays)) throw ValidationError("vpoly: non-finite entries");
  vertices_.resize(vertices.rows(), 0);
  for (Index j = 0; j < vertices.cols(); ++j) append_unique(vertices_, vertices.col(j), kDedupTol);
  rays_.resize(vertices.rows(), 0);
  for (Index j = 0; j < rays.cols(); ++j) {
    const double nrm = rays.col(j).norm();
    if (nrm <= kZeroRow) throw ValidationError("vpoly: ray " + std::to_string(j) + " is zero");
    bool dup = false;
    for (Index k = 0; k < rays_.cols(); ++k) {
      if ((rays_.col(k) / rays_.col(k).norm() - rays.col(j) / nrm).cwiseAbs().maxCoeff() <= kDedupTol) dup = true;
    }
    if (!dup) {
      rays_.conservativeResize(Eigen::NoChange, rays_.cols() + 1);
      rays_.col(rays_.cols() - 1) = rays.col(j);
    }
  }
}

VPolytope::VPolytope(Matrix vertices) : VPolytope(std::move(vertices), Matrix()) {}

Ball::Ball(Vector center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.size() < 1) throw ValidationError("ball: dimension must be at least 1");
  if (!all_finite(center_)) throw ValidationError("ball: non-finite center");
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) throw ValidationError("ball: radius must be positive");
}

Index ConvexSet::dim() const {
  return std::visit([](const auto& s) { return s.dim(); }, payload_);
}

const char* ConvexSet::kind() const {
  if (as<HPolyhedron>()) return "hpoly";
  if (as<VPolytope>()) return "vpoly";
  return "ball";
}

// ---------------------------------------------------------------------------
// PolyhedralCone

PolyhedralCone PolyhedralCone::from_halfspaces(Matrix A) {
  const Index n = A.cols();
  return PolyhedralCone(std::move(A), n, false);
}

PolyhedralCone PolyhedralCone::from_generators(Matrix rays) {
  const Index n = rays.rows();
  return PolyhedralCone(std::move(rays), n, true);
}

Matrix PolyhedralCone::generators() const {
  if (generator_form_) return data_;
  check_conversion_dim(dim_, "PolyhedralCone::generators");
  if (data_.rows() == 0) {
    Matrix g(dim_, 2 * dim_);
    g << Matrix::Identity(dim_, dim_), -Matrix::Identity(dim_, dim_);
    return g;
  }
  return to_vertices(HPolyhedron(data_, Vector::Zero(data_.rows()))).rays();
}

bool PolyhedralCone::contains(const Vector& x, double tol) const {
  require_dim(dim_, x.size(), "PolyhedralCone::contains");
  if (!generator_form_) return data_.rows() == 0 || (data_ * x).maxCoeff() <= tol;
  if (data_.cols() == 0) return x.cwiseAbs().maxCoeff() <= tol;
  return hull_residual(Matrix(dim_, 0), data_, x) <= tol;
}

double PolyhedralCone::support(const Vector& d) const {
  require_dim(dim_, d.size(), "PolyhedralCone::support");
  if (generator_form_) return ray_unbounded(data_, d) ? kInf : 0.0;
  if (data_.rows() == 0) return d.cwiseAbs().maxCoeff() > 0.0 ? kInf : 0.0;
  const auto sol = maximize_over(data_, Vector::Zero(data_.rows()), d);
  return sol.status == LPStatus::unbounded ? kInf : 0.0;
}

bool PolyhedralCone::is_zero() const {
  if (generator_form_) return data_.cols() == 0 || data_.cwiseAbs().maxCoeff() <= kZeroRow;
  for (Index i = 0; i < dim_; ++i) {
    for (double sgn : {1.0, -1.0}) {
      if (support(sgn * Vector::Unit(dim_, i)) > 0.0) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dynamics

Dynamics::Dynamics(ConvexSet set) : set_(std::move(set)) {
  const Index n = set_.dim();
  if (const auto* h = set_.as<HPolyhedron>()) {
    if (h->num_constraints() > 0 && h->b().minCoeff() < 1e-9) {
      throw ValidationError("dynamics: 0 is not an interior point (some b_i < 1e-9)");
    }
  } else if (const auto* v = set_.as<VPolytope>()) {
    for (Index i = 0; i < n; ++i) {
      for (double sgn : {1.0, -1.0}) {
        const Vector probe = sgn * 1e-6 * Vector::Unit(n, i);
        if (hull_residual(v->vertices(), v->rays(), probe) > 1e-12) {
          throw ValidationError("dynamics: 0 is not an interior point (probe +-1e-6 e_" + std::to_string(i) +
                                " outside)");
        }
      }
    }
  } else if (const auto* b = set_.as<Ball>()) {
    if (!(b->center().norm() < b->radius())) {
      throw ValidationError("dynamics: 0 is not an interior point of the ball");
    }
  }
}

// ---------------------------------------------------------------------------
// Basic calculus

bool contains(const ConvexSet& s, const Vector& x, double tol) {
  require_dim(s.dim(), x.size(), "contains");
  if (const auto* h = s.as<HPolyhedron>()) {
    return h->num_constraints() == 0 || (h->A() * x - h->b()).maxCoeff() <= tol;
  }
  if (const auto* v = s.as<VPolytope>()) {
    return hull_residual(v->vertices(), v->rays(), x) <= tol;
  }
  const auto& b = *s.as<Ball>();
  return (x - b.center()).norm() <= b.radius() + tol;
}

SupportValue support(const ConvexSet& s, const Vector& d) {
  require_dim(s.dim(), d.size(), "support");
  SupportValue out;
  if (const auto* h = s.as<HPolyhedron>()) {
    const auto sol = maximize_over(h->A(), h->b(), d);
    if (sol.status == LPStatus::unbounded) {
      out.value = kInf;
    } else if (sol.optimal()) {
      out.value = d.dot(sol.x);
      out.argmax = sol.x;
    } else {
      throw Error("support: LP status " + std::string(to_string(sol.status)));
    }
    return out;
  }
  if (const auto* v = s.as<VPolytope>()) {
    if (ray_unbounded(v->rays(), d)) {
      out.value = kInf;
      return out;
    }
    Index best = 0;
    const Vector scores = v->vertices().transpose() * d;
    out.value = scores.maxCoeff(&best);
    out.argmax = v->vertices().col(best);
    return out;
  }
  const auto& b = *s.as<Ball>();
  const double nd = d.norm();
  out.value = d.dot(b.center()) + b.radius() * nd;
  out.argmax = nd > 0.0 ? Vector(b.center() + b.radius() * d / nd) : b.center();
  return out;
}

Verdict normal_cone_contains(const ConvexSet& s, const Vector& xbar, const Vector& v, double tol) {
  require_dim(s.dim(), v.size(), "normal_cone_contains");
  if (!contains(s, xbar, tol)) return {false, "base point is not in the set; the normal cone is empty"};
  const auto sup = support(s, v);
  const bool ok = sup.value <= v.dot(xbar) + tol;
  return {ok, ok ? "" : "support exceeds <v, xbar>"};
}

PolyhedralCone normal_cone(const HPolyhedron& s, const Vector& xbar, double tol) {
  require_dim(s.dim(), xbar.size(), "normal_cone");
  const Vector slack = s.b() - s.A() * xbar;
  if (s.num_constraints() > 0 && slack.minCoeff() < -tol) {
    throw ValidationError("normal_cone: base point is not in the set");
  }
  Matrix gens(s.dim(), 0);
  for (Index i = 0; i < s.num_constraints(); ++i) {
    if (slack(i) <= tol) {
      gens.conservativeResize(Eigen::NoChange, gens.cols() + 1);
      gens.col(gens.cols() - 1) = s.A().row(i).transpose();
    }
  }
  return PolyhedralCone::from_generators(std::move(gens));
}

PolyhedralCone horizon_cone(const ConvexSet& s) {
  if (const auto* h = s.as<HPolyhedron>()) return PolyhedralCone::from_halfspaces(h->A());
  if (const auto* v = s.as<VPolytope>()) return PolyhedralCone::from_generators(v->rays());
  return PolyhedralCone::from_generators(Matrix(s.dim(), 0));
}

ConvexSet polar(const Dynamics& f) {
  const Index n = f.dim();
  if (const auto* h = f.set().as<HPolyhedron>()) {
    Matrix verts(n, h->num_constraints() + 1);
    verts.col(0).setZero();
    for (Index i = 0; i < h->num_constraints(); ++i) verts.col(i + 1) = h->A().row(i).transpose() / h->b()(i);
    return VPolytope(std::move(verts));
  }
  if (const auto* v = f.set().as<VPolytope>()) {
    Matrix A(0, n);
    Vector b(0);
    auto push = [&](const Vector& row, double rhs) {
      if (row.norm() <= kZeroRow) return;  // the origin contributes a vacuous constraint
      A.conservativeResize(A.rows() + 1, n);
      A.row(A.rows() - 1) = row.transpose();
      b.conservativeResize(b.size() + 1);
      b(b.size() - 1) = rhs;
    };
    for (Index j = 0; j < v->vertices().cols(); ++j) push(v->vertices().col(j), 1.0);
    for (Index j = 0; j < v->rays().cols(); ++j) push(v->rays().col(j), 0.0);
    return HPolyhedron(std::move(A), std::move(b));
  }
  const auto& b = *f.set().as<Ball>();
  if (b.center().norm() > 0.0) throw UnsupportedError("polar: only origin-centred balls have a ball polar");
  return Ball(Vector::Zero(n), 1.0 / b.radius());
}

double polar_norm(const Dynamics& f) {
  if (const auto* h = f.set().as<HPolyhedron>()) {
    double best = 0.0;
    for (Index i = 0; i < h->num_constraints(); ++i) best = std::max(best, h->A().row(i).norm() / h->b()(i));
    if (h->num_constraints() == 0) return 0.0;
    return best;
  }
  if (const auto* b = f.set().as<Ball>()) return 1.0 / (b->radius() - b->center().norm());
  const auto verts = to_vertices(*polar(f).as<HPolyhedron>());
  if (verts.rays().cols() > 0) throw Error("polar_norm: polar is unbounded; 0 is not interior");
  return verts.vertices().colwise().norm().maxCoeff();
}

Vector euclidean_project(const ConvexSet& s, const Vector& x) {
  require_dim(s.dim(), x.size(), "euclidean_project");
  if (const auto* h = s.as<HPolyhedron>()) return project_qp(h->A(), h->b(), x);
  if (const auto* v = s.as<VPolytope>()) return project_qp_hull(v->vertices(), v->rays(), x);
  const auto& b = *s.as<Ball>();
  const Vector d = x - b.center();
  const double nd = d.norm();
  if (nd <= b.radius()) return x;
  return b.center() + b.radius() * d / nd;
}

bool is_bounded(const ConvexSet& s) {
  if (const auto* v = s.as<VPolytope>()) return v->bounded();
  if (s.as<Ball>()) return true;
  const auto& h = *s.as<HPolyhedron>();
  for (Index i = 0; i < h.dim(); ++i) {
    for (double sgn : {1.0, -1.0}) {
      if (maximize_over(h.A(), h.b(), sgn * Vector::Unit(h.dim(), i)).status == LPStatus::unbounded) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Representation conversion (desk scale)

VPolytope to_vertices(const HPolyhedron& h) {
  const Index n = h.dim();
  check_conversion_dim(n, "to_vertices");
  const Matrix& A = h.A();
  const Vector& b = h.b();
  const Index m = A.rows();
  const double scale = 1.0 + (m > 0 ? std::max(A.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()) : 0.0);
  const double tol = 1e-9 * scale;

  // Lineality space {d : A d = 0}; the pointed part lives in its orthogonal complement.
  const Matrix lin = kernel(A, n);
  const Index ell = lin.cols();
  const Matrix lin_t = lin.transpose();

  Matrix verts(n, 0);
  for_each_subset(m, n - ell, [&](const std::vector<Index>& s) {
    Matrix M(n, n);
    Vector rhs(n);
    M.topRows(n - ell) = select_rows(A, s);
    M.bottomRows(ell) = lin_t;
    for (Index i = 0; i < n - ell; ++i) rhs(i) = b(s[static_cast<std::size_t>(i)]);
    rhs.tail(ell).setZero();
    Eigen::FullPivLU<Matrix> lu(M);
    lu.setThreshold(1e-10);
    if (lu.rank() < n) return;
    const Vector x = lu.solve(rhs);
    if (m == 0 || (A * x - b).maxCoeff() <= tol) append_unique(verts, x, 1e-7 * scale);
  });

  Matrix rays(n, 0);
  auto push_ray = [&](Vector d) {
    d /= d.norm();
    append_unique(rays, d, 1e-7);
  };
  if (n - ell >= 1) {
    for_each_subset(m, n - ell - 1, [&](const std::vector<Index>& s) {
      Matrix M(n - 1, n);
      M.topRows(n - ell - 1) = select_rows(A, s);
      M.bottomRows(ell) = lin_t;
      if (rank_of(M) < n - 1) return;
      const Matrix ker = kernel(M, n);
      if (ker.cols() != 1) return;
      for (double sgn : {1.0, -1.0}) {
        const Vector d = sgn * ker.col(0);
        if (m == 0 || (A * d).maxCoeff() <= 1e-9 * scale) push_ray(d);
      }
    });
  }
  for (Index j = 0; j < ell; ++j) {
    push_ray(lin.col(j));
    push_ray(-lin.col(j));
  }
  if (verts.cols() == 0) throw Error("to_vertices: no vertex found for a nonempty polyhedron");
  return VPolytope(std::move(verts), std::move(rays));
}

HPolyhedron to_halfspaces(const VPolytope& v) {
  const Index n = v.dim();
  check_conversion_dim(n, "to_halfspaces");
  const Index nv = v.vertices().cols();
  const Index nr = v.rays().cols();
  // Homogenised generators (v, 1) and (r, 0).
  Matrix G(n + 1, nv + nr);
  G.topLeftCorner(n, nv) = v.vertices();
  G.bottomLeftCorner(1, nv).setOnes();
  if (nr > 0) {
    G.topRightCorner(n, nr) = v.rays();
    G.bottomRightCorner(1, nr).setZero();
  }
  const double scale = 1.0 + G.cwiseAbs().maxCoeff();

  Eigen::JacobiSVD<Matrix> svd(G, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  Index k = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * std::max(1.0, sv(0))) ++k;
  }
  const Matrix basis = svd.matrixU().leftCols(k);
  const Matrix complement = svd.matrixU().rightCols(n + 1 - k);

  Matrix A(0, n);
  Vector b(0);
  auto push = [&](const Vector& h) {
    // h . (x, 1) <= 0  <=>  a . x <= -c
    Vector a = h.head(n);
    double c = h(n);
    const double na = a.norm();
    if (na <= 1e-10) return;
    a /= na;
    c /= na;
    for (Index i = 0; i < A.rows(); ++i) {
      if ((A.row(i).transpose() - a).cwiseAbs().maxCoeff() <= 1e-9 && std::abs(b(i) + c) <= 1e-9 * scale) return;
    }
    A.conservativeResize(A.rows() + 1, n);
    A.row(A.rows() - 1) = a.transpose();
    b.conservativeResize(b.size() + 1);
    b(b.size() - 1) = -c;
  };

  for (Index j = 0; j < complement.cols(); ++j) {
    push(complement.col(j));
    push(-complement.col(j));
  }

  const Matrix Y = basis.transpose() * G;  // k x N coordinates inside span(G)
  const Index N = G.cols();
  for_each_subset(N, k - 1, [&](const std::vector<Index>& s) {
    Matrix Ys(k - 1, k);
    for (Index i = 0; i < k - 1; ++i) Ys.row(i) = Y.col(s[static_cast<std::size_t>(i)]).transpose();
    if (rank_of(Ys) < k - 1) return;
    const Matrix ker = kernel(Ys, k);
    if (ker.cols() != 1) return;
    const Vector eta = ker.col(0);
    const Vector vals = Y.transpose() * eta;
    const double vtol = 1e-9 * scale;
    if (vals.maxCoeff() <= vtol) {
      push(basis * eta);
    } else if (vals.minCoeff() >= -vtol) {
      push(-(basis * eta));
    }
  });
  return HPolyhedron(std::move(A), std::move(b));
}

HPolyhedron as_hpolyhedron(const ConvexSet& s) {
  if (const auto* h = s.as<HPolyhedron>()) return *h;
  if (const auto* v = s.as<VPolytope>()) return to_halfspaces(*v);
  throw UnsupportedError("a polyhedral set is required; balls have no H-representation");
}

VPolytope as_vpolytope(const ConvexSet& s) {
  if (const auto* v = s.as<VPolytope>()) return *v;
  if (const auto* h = s.as<HPolyhedron>()) return to_vertices(*h);
  throw UnsupportedError("a polyhedral set is required; balls have no V-representation");
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  require_dim(p.dim(), q.dim(), "minkowski_sum");
  const Index n = p.dim();
  Matrix verts(n, p.vertices().cols() * q.vertices().cols());
  Index k = 0;
  for (Index i = 0; i < p.vertices().cols(); ++i) {
    for (Index j = 0; j < q.vertices().cols(); ++j) verts.col(k++) = p.vertices().col(i) + q.vertices().col(j);
  }
  Matrix rays(n, p.rays().cols() + q.rays().cols());
  rays << p.rays(), q.rays();
  return VPolytope(std::move(verts), std::move(rays));
}

VPolytope scaled(const VPolytope& p, double lambda) {
  if (lambda == 0.0) return VPolytope(Matrix::Zero(p.dim(), 1));
  Matrix rays = p.rays();
  if (lambda < 0.0) rays = -rays;
  return VPolytope(lambda * p.vertices(), std::move(rays));
}

Box bounding_box(const ConvexSet& s) {
  const Index n = s.dim();
  Box box{Vector(n), Vector(n)};
  for (Index i = 0; i < n; ++i) {
    const auto hi = support(s, Vector::Unit(n, i));
    const auto lo = support(s, -Vector::Unit(n, i));
    if (!hi.finite() || !lo.finite()) throw ValidationError("bounding_box: set is unbounded");
    box.hi(i) = hi.value;
    box.lo(i) = -lo.value;
  }
  return box;
}

bool is_symmetric(const Dynamics& f, double tol) {
  const auto& s = f.set();
  if (const auto* b = s.as<Ball>()) return b->center().norm() <= tol;
  if (const auto* h = s.as<HPolyhedron>()) {
    // F c -F  <=>  sigma_F(-a_i) <= b_i for every row.
    for (Index i = 0; i < h->num_constraints(); ++i) {
      if (support(s, -h->A().row(i).transpose()).value > h->b()(i) + tol) return false;
    }
    return true;
  }
  const auto& v = *s.as<VPolytope>();
  for (Index j = 0; j < v.vertices().cols(); ++j) {
    if (!contains(s, -v.vertices().col(j), tol)) return false;
  }
  const auto cone = horizon_cone(s);
  for (Index j = 0; j < v.rays().cols(); ++j) {
    if (!cone.contains(-v.rays().col(j), tol)) return false;
  }
  return true;
}

}  // namespace mtf
