#include "mtf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mtf {

void SampleSpec::validate() const {
  if (lo.size() != hi.size()) throw DimensionError("SampleSpec: lo and hi differ in dimension");
  if (resolution != 0 && resolution < 3) throw ValidationError("SampleSpec: resolution must be >= 3");
  if (random_count < 0) throw ValidationError("SampleSpec: random_count must be nonnegative");
  for (Index i = 0; i < lo.size(); ++i) {
    if (!(lo(i) <= hi(i))) throw ValidationError("SampleSpec: lo must not exceed hi");
  }
}

void CertReport::record(double violation, const Vector& at) {
  ++samples;
  if (violation > worst_violation) {
    worst_violation = violation;
    witness = at;
  }
}

void CertReport::finalize() { pass = worst_violation <= tolerance; }

Vector Rng::uniform(const Vector& lo, const Vector& hi) {
  Vector x(lo.size());
  for (Index i = 0; i < lo.size(); ++i) x(i) = uniform(lo(i), hi(i));
  return x;
}

Vector Rng::direction(Index n) {
  Vector d(n);
  do {
    for (Index i = 0; i < n; ++i) {
      const double u1 = 1.0 - uniform();  // (0, 1]
      const double u2 = uniform();
      d(i) = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
  } while (d.norm() < 1e-12);
  return d / d.norm();
}

double gauge_bisect(const Dynamics& f, const Vector& x, double tol) {
  require_dim(f.dim(), x.size(), "gauge_bisect");
  if (x.isZero(0.0)) return 0.0;
  auto inside = [&](double t) { return contains(f.set(), x / t, 1e-12); };
  double lo = tol;
  double hi = 1.0;
  if (inside(lo)) return 0.0;
  while (!inside(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 0x1p60) throw Error("gauge_bisect: bracket growth cap exceeded");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<Vector> sample_points(const SampleSpec& spec) {
  spec.validate();
  const Index n = spec.lo.size();
  std::vector<Vector> pts;
  if (spec.resolution > 0 && n > 0) {
    const long res = spec.resolution;
    long total = 1;
    for (Index i = 0; i < n; ++i) total *= res;
    pts.reserve(static_cast<std::size_t>(total + spec.random_count));
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    for (long k = 0; k < total; ++k) {
      Vector p(n);
      for (Index i = 0; i < n; ++i) {
        const double s = static_cast<double>(idx[static_cast<std::size_t>(i)]) / static_cast<double>(res - 1);
        p(i) = spec.lo(i) + s * (spec.hi(i) - spec.lo(i));
      }
      pts.push_back(std::move(p));
      for (Index i = 0; i < n; ++i) {
        if (++idx[static_cast<std::size_t>(i)] < res) break;
        idx[static_cast<std::size_t>(i)] = 0;
      }
    }
  }
  Rng rng(spec.seed);
  for (int k = 0; k < spec.random_count; ++k) pts.push_back(rng.uniform(spec.lo, spec.hi));
  return pts;
}

double mintime_bruteforce(const Dynamics& f, const ConvexSet& omega, const Vector& x, const SampleSpec& spec) {
  require_dim(f.dim(), omega.dim(), "mintime_bruteforce: target");
  require_dim(f.dim(), x.size(), "mintime_bruteforce: point");
  if (!is_bounded(omega)) throw ValidationError("mintime_bruteforce: target must be bounded");

  SampleSpec grid = spec;
  if (grid.lo.size() != x.size()) {
    const Box box = bounding_box(omega);
    grid.lo = box.lo;
    grid.hi = box.hi;
  }
  std::vector<Vector> cands;
  if (contains(omega, x, 0.0)) return 0.0;
  for (auto& w : sample_points(grid)) {
    if (contains(omega, w, 0.0)) cands.push_back(std::move(w));
  }
  if (!omega.as<Ball>() && x.size() <= kMaxConversionDim) {
    const VPolytope v = as_vpolytope(omega);
    for (Index j = 0; j < v.vertices().cols(); ++j) cands.push_back(v.vertices().col(j));
  }
  if (cands.empty()) throw Error("mintime_bruteforce: no sample fell inside the target");

  double best = kInf;
  for (const auto& w : cands) {
    const Vector d = w - x;
    // rho_F(d) < best needs d in best * F; skip the bisection otherwise.
    if (std::isfinite(best) && !contains(f.set(), d / best, 1e-12)) continue;
    best = std::min(best, gauge_bisect(f, d));
  }
  return best;
}

SampledFunction sample_function(const ScalarFn& f, std::vector<Vector> points) {
  SampledFunction out;
  out.values.reserve(points.size());
  for (const auto& p : points) out.values.push_back(f(p));
  out.points = std::move(points);
  return out;
}

std::vector<Vector> axis_probes(const Vector& xbar) {
  std::vector<Vector> pts;
  for (double h : {1e-3, 1e-2, 0.1, 1.0}) {
    for (Index i = 0; i < xbar.size(); ++i) {
      pts.push_back(xbar + h * Vector::Unit(xbar.size(), i));
      pts.push_back(xbar - h * Vector::Unit(xbar.size(), i));
    }
  }
  return pts;
}

CertReport subgradient_certify(const SampledFunction& fs, const Vector& xbar, double f_xbar, const Vector& v,
                               double tol) {
  require_dim(xbar.size(), v.size(), "subgradient_certify");
  if (!std::isfinite(f_xbar)) throw ValidationError("subgradient_certify: f must be finite at xbar");
  CertReport rep;
  rep.name = "subgradient";
  rep.tolerance = tol;
  for (std::size_t k = 0; k < fs.points.size(); ++k) {
    const double fx = fs.values[k];
    if (fx == kInf) {
      ++rep.samples;
      continue;
    }
    rep.record(v.dot(fs.points[k] - xbar) - (fx - f_xbar), fs.points[k]);
  }
  rep.finalize();
  return rep;
}

CertReport subgradient_certify(const ScalarFn& f, const Vector& xbar, const Vector& v, const SampleSpec& spec,
                               double tol, const std::vector<Vector>& extra) {
  auto pts = sample_points(spec);
  for (auto& p : axis_probes(xbar)) pts.push_back(std::move(p));
  pts.insert(pts.end(), extra.begin(), extra.end());
  auto rep = subgradient_certify(sample_function(f, std::move(pts)), xbar, f(xbar), v, tol);
  rep.seed = spec.seed;
  return rep;
}

DirDeriv dirderiv_fd(const ScalarFn& f, const Vector& xbar, const Vector& d, const std::vector<double>& hs) {
  if (hs.empty()) throw ValidationError("dirderiv_fd: empty step schedule");
  const double f0 = f(xbar);
  DirDeriv out;
  for (double h : hs) out.quotients.push_back((f(xbar + h * d) - f0) / h);
  for (std::size_t k = 1; k < out.quotients.size(); ++k) {
    const double q = out.quotients[k];
    if (q > out.quotients[k - 1] + 1e-9 * (1.0 + std::abs(q))) out.monotone = false;
  }
  const std::size_t m = out.quotients.size();
  out.value = out.quotients.back();
  if (m >= 2) {
    const double r = hs[m - 2] / hs[m - 1];
    out.value += (out.quotients[m - 1] - out.quotients[m - 2]) / (r - 1.0);
  }
  return out;
}

double infconv_sample(const ScalarFn& mu, const Dynamics& f, const Vector& x, const SampleSpec& spec) {
  require_dim(f.dim(), x.size(), "infconv_sample");
  const Index n = x.size();
  auto pts = sample_points(spec);
  pts.push_back(x);

  double best = kInf;
  Vector arg = x;
  auto consider = [&](const Vector& y) {
    const double m = mu(y);
    if (!(m < best)) return false;
    const Vector d = x - y;
    if (std::isfinite(best) && !contains(f.set(), d / (best - m), 1e-12)) return false;
    const double val = m + gauge_bisect(f, d);
    if (val < best) {
      best = val;
      arg = y;
      return true;
    }
    return false;
  };
  for (const auto& y : pts) consider(y);
  if (!std::isfinite(best)) throw Error("infconv_sample: mu is infinite at every sample");

  // Pattern descent over coordinate and pairwise diagonal moves.
  std::vector<Vector> dirs;
  for (Index i = 0; i < n; ++i) {
    dirs.push_back(Vector::Unit(n, i));
    dirs.push_back(-Vector::Unit(n, i));
    for (Index j = i + 1; j < n; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          Vector d = Vector::Zero(n);
          d(i) = si;
          d(j) = sj;
          dirs.push_back(d / std::sqrt(2.0));
        }
      }
    }
  }
  double step = (spec.hi - spec.lo).maxCoeff();
  if (spec.resolution > 1) step /= (spec.resolution - 1);
  if (!(step > 0.0)) step = 1e-2;
  for (int it = 0; it < 50; ++it) {
    const Vector base = arg;
    bool moved = false;
    for (const auto& d : dirs) moved = consider(base + step * d) || moved;
    if (!moved) step *= 0.5;
  }
  return best;
}

}  // namespace mtf
