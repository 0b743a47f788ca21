#ifndef MTF_ORACLE_HPP
#define MTF_ORACLE_HPP

// Brute-force references. Nothing here calls the closed-form or LP evaluation
// paths of the gauge / mintime / signed modules; only set membership is shared.

#include "mtf/geometry.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mtf {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct SampleSpec {
  Vector lo;
  Vector hi;
  int resolution = 21;   // grid nodes per axis, >= 3 (0 disables the grid)
  int random_count = 0;  // uniform points in the box
  std::uint64_t seed = kDefaultSeed;

  void validate() const;
};

struct CertReport {
  std::string name;
  bool pass = true;
  double worst_violation = 0.0;
  double tolerance = 0.0;
  std::optional<Vector> witness;
  long samples = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string detail;

  /// Folds a measured violation in; keeps the first worst witness.
  void record(double violation, const Vector& at);
  /// Sets pass from worst_violation <= tolerance.
  void finalize();
};

/// Deterministic stream: uniform doubles from the top 53 bits of mt19937_64.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Vector uniform(const Vector& lo, const Vector& hi);
  /// Uniform direction on the unit sphere (Box-Muller normals, normalized).
  Vector direction(Index n);
  Index index(Index n) { return static_cast<Index>(eng_() % static_cast<std::uint64_t>(n)); }

private:
  std::mt19937_64 eng_;
};

using ScalarFn = std::function<double(const Vector&)>;

/// inf{t > 0 : x in tF} by bisection on membership of x / t.
double gauge_bisect(const Dynamics& f, const Vector& x, double tol = 1e-10);

/// Grid nodes (row-major, first coordinate fastest) followed by seeded random points.
std::vector<Vector> sample_points(const SampleSpec& spec);

/// min over sampled w in Omega of gauge_bisect(F, w - x). Omega must be bounded.
/// The grid covers spec.lo..spec.hi when set, otherwise the bounding box of Omega;
/// polyhedral vertices and x itself (when in Omega) are added.
double mintime_bruteforce(const Dynamics& f, const ConvexSet& omega, const Vector& x, const SampleSpec& spec);

/// Function values cached on a fixed point set so many candidates v can be checked.
struct SampledFunction {
  std::vector<Vector> points;
  std::vector<double> values;
};

SampledFunction sample_function(const ScalarFn& f, std::vector<Vector> points);

/// Structured probes around xbar: xbar +- h e_i for h in {1e-3, 1e-2, 0.1, 1}.
std::vector<Vector> axis_probes(const Vector& xbar);

/// Checks <v, x - xbar> <= f(x) - f(xbar) + tol on every cached sample.
CertReport subgradient_certify(const SampledFunction& fs, const Vector& xbar, double f_xbar, const Vector& v,
                               double tol);

/// One-shot form: samples = spec points + axis probes + extra.
CertReport subgradient_certify(const ScalarFn& f, const Vector& xbar, const Vector& v, const SampleSpec& spec,
                               double tol, const std::vector<Vector>& extra = {});

struct DirDeriv {
  double value = 0.0;               // Richardson extrapolation of the last two quotients
  std::vector<double> quotients;    // (f(xbar + h d) - f(xbar)) / h per h
  bool monotone = true;             // quotients non-increasing as h shrinks
};

DirDeriv dirderiv_fd(const ScalarFn& f, const Vector& xbar, const Vector& d,
                     const std::vector<double>& hs = {1e-2, 1e-3, 1e-4});

/// min over y of mu(y) + rho_F(x - y): grid and random samples of spec (plus x),
/// then 50 pattern-descent steps with halving step from the best sample.
double infconv_sample(const ScalarFn& mu, const Dynamics& f, const Vector& x, const SampleSpec& spec);

}  // namespace mtf

#endif  // MTF_ORACLE_HPP
