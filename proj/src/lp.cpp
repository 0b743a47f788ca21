#include "mtf/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace mtf {

LinearProgram::LinearProgram(Index num_vars)
    : c(Vector::Zero(num_vars)),
      A(0, num_vars),
      b(0),
      E(0, num_vars),
      f(0),
      lower(static_cast<std::size_t>(num_vars)) {}

void LinearProgram::set_nonnegative() {
  for (auto& l : lower) l = 0.0;
}

void LinearProgram::add_inequality(const Eigen::Ref<const Vector>& row, double rhs) {
  require_dim(num_vars(), row.size(), "LinearProgram::add_inequality");
  A.conservativeResize(A.rows() + 1, num_vars());
  A.row(A.rows() - 1) = row.transpose();
  b.conservativeResize(b.size() + 1);
  b(b.size() - 1) = rhs;
}

void LinearProgram::add_equality(const Eigen::Ref<const Vector>& row, double rhs) {
  require_dim(num_vars(), row.size(), "LinearProgram::add_equality");
  E.conservativeResize(E.rows() + 1, num_vars());
  E.row(E.rows() - 1) = row.transpose();
  f.conservativeResize(f.size() + 1);
  f(f.size() - 1) = rhs;
}

const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::optimal: return "optimal";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::unbounded: return "unbounded";
    case LPStatus::iteration_limit: return "iteration_limit";
  }
  return "unknown";
}

namespace {

// Tableau in standard form: rows 0..m-1 are constraints, row m is the
// reduced-cost row, column N holds the right-hand side.
class Tableau {
public:
  Tableau(Matrix t, std::vector<Index> basis, Index num_artificial_start)
      : t_(std::move(t)), basis_(std::move(basis)), art_start_(num_artificial_start) {}

  Index rows() const { return t_.rows() - 1; }
  Index cols() const { return t_.cols() - 1; }
  Matrix& data() { return t_; }
  const std::vector<Index>& basis() const { return basis_; }
  bool artificial(Index j) const { return j >= art_start_; }

  void pivot(Index r, Index c) {
    t_.row(r) /= t_(r, c);
    for (Index i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      const double factor = t_(i, c);
      if (factor != 0.0) t_.row(i) -= factor * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  enum class Outcome { optimal, unbounded, limit };

  // Bland's rule: lowest-index improving column, lowest-index leaving basic variable.
  Outcome run(long& iterations, Index& entering_out) {
    const Index m = rows();
    const Index n = cols();
    while (true) {
      Index entering = -1;
      for (Index j = 0; j < n; ++j) {
        if (artificial(j) && !allow_artificial_) continue;
        if (t_(m, j) < -kPivotTol) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return Outcome::optimal;

      Index leaving = -1;
      double best = kInf;
      for (Index i = 0; i < m; ++i) {
        const double a = t_(i, entering);
        if (a <= kPivotTol) continue;
        const double ratio = t_(i, n) / a;
        if (leaving < 0 || ratio < best - 1e-12) {
          best = ratio;
          leaving = i;
        } else if (ratio <= best + 1e-12 &&
                   basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)]) {
          leaving = i;
        }
      }
      if (leaving < 0) {
        entering_out = entering;
        return Outcome::unbounded;
      }
      pivot(leaving, entering);
      if (++iterations >= kMaxSimplexIterations) return Outcome::limit;
    }
  }

  void set_allow_artificial(bool v) { allow_artificial_ = v; }

private:
  Matrix t_;
  std::vector<Index> basis_;
  Index art_start_;
  bool allow_artificial_ = true;
};

}  // namespace

LPSolution solve_lp(const LinearProgram& p) {
  const Index n = p.num_vars();
  if (n < 1) throw ValidationError("solve_lp: at least one variable required");
  require_dim(n, p.A.cols(), "solve_lp: inequality block");
  require_dim(p.A.rows(), p.b.size(), "solve_lp: inequality rhs");
  require_dim(n, p.E.cols(), "solve_lp: equality block");
  require_dim(p.E.rows(), p.f.size(), "solve_lp: equality rhs");
  require_dim(n, static_cast<Index>(p.lower.size()), "solve_lp: lower bounds");

  // Split each original variable into one shifted (bounded) or two (free) columns.
  std::vector<Index> pos_col(static_cast<std::size_t>(n)), neg_col(static_cast<std::size_t>(n), -1);
  Vector shift = Vector::Zero(n);
  Index ny = 0;
  for (Index j = 0; j < n; ++j) {
    const auto& lb = p.lower[static_cast<std::size_t>(j)];
    pos_col[static_cast<std::size_t>(j)] = ny++;
    if (lb) {
      shift(j) = *lb;
    } else {
      neg_col[static_cast<std::size_t>(j)] = ny++;
    }
  }
  auto expand = [&](const Matrix& M) {
    Matrix out = Matrix::Zero(M.rows(), ny);
    for (Index j = 0; j < n; ++j) {
      out.col(pos_col[static_cast<std::size_t>(j)]) = M.col(j);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) out.col(neg_col[static_cast<std::size_t>(j)]) = -M.col(j);
    }
    return out;
  };

  const Index mi = p.A.rows();
  const Index me = p.E.rows();
  const Index m = mi + me;
  Matrix rows(m, ny + mi);
  rows.setZero();
  Vector rhs(m);
  if (mi > 0) {
    rows.topLeftCorner(mi, ny) = expand(p.A);
    rows.block(0, ny, mi, mi).setIdentity();
    rhs.head(mi) = p.b - p.A * shift;
  }
  if (me > 0) {
    rows.bottomLeftCorner(me, ny) = expand(p.E);
    rhs.tail(me) = p.f - p.E * shift;
  }
  for (Index i = 0; i < m; ++i) {
    if (rhs(i) < 0) {
      rows.row(i) *= -1.0;
      rhs(i) = -rhs(i);
    }
  }

  // Initial basis: a slack with +1 coefficient where available, else an artificial.
  std::vector<Index> basis(static_cast<std::size_t>(m));
  std::vector<Index> needs_art;
  for (Index i = 0; i < m; ++i) {
    if (i < mi && rows(i, ny + i) > 0) {
      basis[static_cast<std::size_t>(i)] = ny + i;
    } else {
      needs_art.push_back(i);
    }
  }
  const Index art_start = ny + mi;
  const Index na = static_cast<Index>(needs_art.size());
  const Index N = art_start + na;

  Matrix t = Matrix::Zero(m + 1, N + 1);
  t.topLeftCorner(m, art_start) = rows;
  t.topRightCorner(m, 1) = rhs;
  for (Index k = 0; k < na; ++k) {
    const Index i = needs_art[static_cast<std::size_t>(k)];
    t(i, art_start + k) = 1.0;
    basis[static_cast<std::size_t>(i)] = art_start + k;
    t.row(m) -= t.row(i);
  }
  t.block(m, art_start, 1, na).setZero();

  Tableau tab(std::move(t), std::move(basis), art_start);
  LPSolution sol;
  Index entering = -1;

  const double feas_tol = kPivotTol * (1.0 + (m > 0 ? rhs.cwiseAbs().maxCoeff() : 0.0));
  if (na > 0) {
    auto outcome = tab.run(sol.iterations, entering);
    if (outcome == Tableau::Outcome::limit) {
      sol.status = LPStatus::iteration_limit;
      return sol;
    }
    if (-tab.data()(m, N) > feas_tol) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    // Drive remaining zero-level artificials out of the basis.
    for (Index i = 0; i < m; ++i) {
      if (!tab.artificial(tab.basis()[static_cast<std::size_t>(i)])) continue;
      for (Index j = 0; j < art_start; ++j) {
        if (std::abs(tab.data()(i, j)) > kPivotTol) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 objective row.
  Vector cost = Vector::Zero(N);
  cost.head(ny) = expand(p.c.transpose()).transpose();
  Matrix& T = tab.data();
  T.row(m).setZero();
  T.row(m).head(N) = cost.transpose();
  for (Index i = 0; i < m; ++i) {
    const double cb = cost(tab.basis()[static_cast<std::size_t>(i)]);
    if (cb != 0.0) T.row(m) -= cb * T.row(i);
  }
  tab.set_allow_artificial(false);
  auto outcome = tab.run(sol.iterations, entering);
  if (outcome == Tableau::Outcome::limit) {
    sol.status = LPStatus::iteration_limit;
    return sol;
  }

  auto to_x = [&](const Vector& y) {
    Vector x(n);
    for (Index j = 0; j < n; ++j) {
      x(j) = y(pos_col[static_cast<std::size_t>(j)]);
      if (neg_col[static_cast<std::size_t>(j)] >= 0) x(j) -= y(neg_col[static_cast<std::size_t>(j)]);
    }
    return x;
  };

  Vector y = Vector::Zero(N);
  for (Index i = 0; i < m; ++i) y(tab.basis()[static_cast<std::size_t>(i)]) = T(i, N);
  sol.x = to_x(y.head(ny).eval()) + shift;

  if (outcome == Tableau::Outcome::unbounded) {
    Vector dy = Vector::Zero(N);
    dy(entering) = 1.0;
    for (Index i = 0; i < m; ++i) dy(tab.basis()[static_cast<std::size_t>(i)]) = -T(i, entering);
    sol.ray = to_x(dy.head(ny).eval());
    sol.status = LPStatus::unbounded;
    sol.value = -kInf;
    return sol;
  }
  sol.status = LPStatus::optimal;
  sol.value = p.c.dot(sol.x);
  return sol;
}

namespace {

// Calls fn on every k-subset of {0..m-1} in lexicographic order until fn returns true.
bool for_each_subset(Index m, Index k, const std::function<bool(const std::vector<Index>&)>& fn) {
  if (k > m) return false;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), Index{0});
  while (true) {
    if (fn(idx)) return true;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void check_qp_scale(Index n, Index m, const char* who) {
  if (n > kMaxQpDim || m > kMaxQpConstraints) {
    throw UnsupportedError(std::string(who) + ": active-set enumeration limited to n <= 8 and 32 constraints");
  }
}

}  // namespace

Vector project_qp(const Matrix& A, const Vector& b, const Vector& x) {
  const Index n = x.size();
  const Index m = A.rows();
  require_dim(n, A.cols(), "project_qp");
  require_dim(m, b.size(), "project_qp");
  check_qp_scale(n, m, "project_qp");

  const double scale = 1.0 + x.cwiseAbs().maxCoeff() + (m > 0 ? b.cwiseAbs().maxCoeff() : 0.0);
  const double tol = 1e-9 * scale;
  if (m == 0 || (A * x - b).maxCoeff() <= tol) return x;

  Vector result;
  for (Index k = 1; k <= std::min(n, m); ++k) {
    const bool found = for_each_subset(m, k, [&](const std::vector<Index>& s) {
      Matrix As(k, n);
      Vector bs(k);
      for (Index i = 0; i < k; ++i) {
        As.row(i) = A.row(s[static_cast<std::size_t>(i)]);
        bs(i) = b(s[static_cast<std::size_t>(i)]);
      }
      const Matrix gram = As * As.transpose();
      Eigen::FullPivLU<Matrix> lu(gram);
      lu.setThreshold(1e-12);
      if (lu.rank() < k) return false;
      const Vector lambda = lu.solve(As * x - bs);
      if (lambda.minCoeff() < -tol) return false;
      const Vector p = x - As.transpose() * lambda;
      if ((A * p - b).maxCoeff() > tol) return false;
      result = p;
      return true;
    });
    if (found) return result;
  }
  throw ValidationError("project_qp: no KKT point found (empty polyhedron?)");
}

Vector project_qp_hull(const Matrix& V, const Matrix& R, const Vector& x) {
  const Index n = x.size();
  require_dim(n, V.rows(), "project_qp_hull: vertices");
  if (R.cols() > 0) require_dim(n, R.rows(), "project_qp_hull: rays");
  const Index nv = V.cols();
  const Index nr = R.cols();
  if (nv == 0) throw ValidationError("project_qp_hull: no vertices");
  check_qp_scale(n, nv + nr, "project_qp_hull");

  double scale = 1.0 + x.cwiseAbs().maxCoeff() + V.cwiseAbs().maxCoeff();
  if (nr > 0) scale += R.cwiseAbs().maxCoeff();
  const double tol = 1e-9 * scale;

  auto optimal = [&](const Vector& p) {
    const Vector g = x - p;
    const double vi_tol = tol * (1.0 + g.norm()) * scale;
    for (Index j = 0; j < nv; ++j) {
      if (g.dot(V.col(j) - p) > vi_tol) return false;
    }
    for (Index j = 0; j < nr; ++j) {
      if (g.dot(R.col(j)) > vi_tol) return false;
    }
    return true;
  };

  Vector result;
  for (Index k = 1; k <= std::min(n + 1, nv + nr); ++k) {
    const bool found = for_each_subset(nv + nr, k, [&](const std::vector<Index>& s) {
      if (s.front() >= nv) return false;  // at least one vertex
      const Vector v0 = V.col(s.front());
      Matrix D(n, k - 1);
      for (Index i = 1; i < k; ++i) {
        const Index g = s[static_cast<std::size_t>(i)];
        D.col(i - 1) = g < nv ? (V.col(g) - v0).eval() : R.col(g - nv).eval();
      }
      Vector coef = Vector::Zero(k - 1);
      if (k > 1) {
        Eigen::FullPivLU<Matrix> lu(D.transpose() * D);
        lu.setThreshold(1e-12);
        if (lu.rank() < k - 1) return false;
        coef = lu.solve(D.transpose() * (x - v0));
        double lambda0 = 1.0;
        for (Index i = 1; i < k; ++i) {
          if (coef(i - 1) < -tol) return false;
          if (s[static_cast<std::size_t>(i)] < nv) lambda0 -= coef(i - 1);
        }
        if (lambda0 < -tol) return false;
      }
      const Vector p = v0 + D * coef;
      if (!optimal(p)) return false;
      result = p;
      return true;
    });
    if (found) return result;
  }
  throw ValidationError("project_qp_hull: no KKT point found");
}

}  // namespace mtf
