// mtf: evaluate minimal time functions, rasterize them, query subdifferentials
// and run the verification suites.

#include "mtf/gauge.hpp"
#include "mtf/io.hpp"
#include "mtf/mintime.hpp"
#include "mtf/signed.hpp"
#include "mtf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace mtf;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kUnsupported = 3 };

struct Options {
  std::string scene;
  std::string fn = "mintime";
  std::string point;
  std::string candidate;
  std::string bbox = "-3,-3,3,3";
  int res = 101;
  std::optional<double> tol;
  std::string seed;
  std::string out;
  bool describe = false;
  std::string suite = "all";
};

std::uint64_t parse_seed(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("--seed: malformed integer \"" + s + "\"");
  }
}

const Dynamics& need_dynamics(const Scene& s) {
  if (!s.dynamics) throw SchemaError("/dynamics", "missing field (required by this function)");
  return *s.dynamics;
}

const ConvexSet& need_omega(const Scene& s) {
  if (!s.omega) throw SchemaError("/omega", "missing field (required by this function)");
  return *s.omega;
}

Vector need_point(const std::string& text, const char* flag, Index dim) {
  if (text.empty()) throw ValidationError(std::string(flag) + " is required");
  Vector p = parse_csv_vector(text);
  if (p.size() != dim) {
    throw ValidationError(std::string(flag) + ": expected " + std::to_string(dim) + " coordinates, got " +
                          std::to_string(p.size()));
  }
  return p;
}

Index scene_dim(const Scene& s) {
  if (s.omega) return s.omega->dim();
  if (s.dynamics) return s.dynamics->dim();
  throw SchemaError("", "scene has neither omega nor dynamics");
}

struct Evaluation {
  double value = 0.0;
  std::optional<Region> region;
  json record;
};

// One point evaluation shared by `eval` and `grid`.
class Evaluator {
public:
  Evaluator(const Scene& s, std::string fn) : scene_(s), fn_(std::move(fn)) {
    if (fn_ == "gauge") {
      need_dynamics(s);
    } else if (fn_ == "mintime") {
      need_dynamics(s);
      need_omega(s);
    } else if (fn_ == "signed" || fn_ == "mu") {
      need_dynamics(s);
      hpoly_ = as_hpolyhedron(need_omega(s));
    } else if (fn_ == "sdist") {
      hpoly_ = as_hpolyhedron(need_omega(s));
    } else {
      throw ValidationError("--fn: unknown function \"" + fn_ + "\" (expected gauge, mintime, signed, sdist or mu)");
    }
  }

  Evaluation operator()(const Vector& x) const {
    Evaluation e;
    json& r = e.record;
    r["fn"] = fn_;
    r["point"] = vector_to_json(x);
    if (fn_ == "gauge") {
      const auto g = gauge(*scene_.dynamics, x);
      e.value = g.value;
      r["witness"] = to_string(g.witness);
      if (g.witness == GaugeWitness::active) r["boundary_point"] = vector_to_json(g.point);
    } else if (fn_ == "mintime") {
      const auto m = eval_mintime(*scene_.dynamics, *scene_.omega, x);
      e.value = m.value;
      r["attained"] = m.attained;
      if (m.target) r["target"] = vector_to_json(*m.target);
      if (m.velocity) r["velocity"] = vector_to_json(*m.velocity);
    } else if (fn_ == "mu") {
      e.value = eval_mu(*scene_.dynamics, *hpoly_, x);
    } else {
      const auto s = fn_ == "signed" ? eval_signed_mintime(*scene_.dynamics, *hpoly_, x) : signed_distance(*hpoly_, x);
      e.value = s.value;
      e.region = s.region;
      r["region"] = to_string(s.region);
      r["witness"] = vector_to_json(s.witness);
    }
    r["value"] = number_to_json(e.value);
    return e;
  }

private:
  const Scene& scene_;
  std::string fn_;
  std::optional<HPolyhedron> hpoly_;
};

std::ostream* open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return &std::cout;
  file.open(path);
  if (!file) throw ValidationError("--out: cannot write " + path);
  return &file;
}

Scene scene_for(const Options& o) {
  if (o.scene.empty()) throw ValidationError("--scene is required");
  Scene s = load_scene(o.scene);
  if (o.tol) s.tol = *o.tol;
  if (!o.seed.empty()) s.seed = parse_seed(o.seed);
  return s;
}

int cmd_eval(const Options& o) {
  const Scene s = scene_for(o);
  const Evaluator ev(s, o.fn);
  const Evaluation e = ev(need_point(o.point, "--point", scene_dim(s)));
  std::cout << format_number(e.value);
  if (e.region) std::cout << ' ' << to_string(*e.region);
  std::cout << '\n' << e.record.dump() << '\n';
  return kOk;
}

int cmd_grid(const Options& o) {
  const Scene s = scene_for(o);
  if (scene_dim(s) != 2) throw ValidationError("grid: only 2D scenes are supported");
  const Vector box = parse_csv_vector(o.bbox);
  if (box.size() != 4 || !(box(0) < box(2)) || !(box(1) < box(3))) {
    throw ValidationError("--bbox: expected x0,y0,x1,y1 with x0 < x1 and y0 < y1");
  }
  if (o.res < 2) throw ValidationError("--res: must be at least 2");
  const Evaluator ev(s, o.fn);
  std::ofstream file;
  std::ostream& os = *open_out(o.out, file);
  os << "x,y,value,region\n";
  const double n = o.res - 1;
  for (int j = 0; j < o.res; ++j) {
    const double y = j == o.res - 1 ? box(3) : box(1) + (box(3) - box(1)) * j / n;
    for (int i = 0; i < o.res; ++i) {
      const double x = i == o.res - 1 ? box(2) : box(0) + (box(2) - box(0)) * i / n;
      Vector p(2);
      p << x, y;
      const Evaluation e = ev(p);
      os << format_number(x) << ',' << format_number(y) << ',' << format_number(e.value) << ','
         << (e.region ? to_string(*e.region) : "") << '\n';
    }
  }
  return kOk;
}

json describe(const SubdiffDescription& d) {
  json j;
  j["kind"] = to_string(d.kind());
  if (d.kind() == SubdiffDescription::Kind::cone_sphere_hull) {
    j["generators"] = points_to_json(d.generators());
  } else {
    j["points"] = points_to_json(d.points());
  }
  return j;
}

int cmd_subdiff(const Options& o) {
  const Scene s = scene_for(o);
  const Vector xbar = need_point(o.point, "--point", scene_dim(s));
  if (o.describe) {
    if (o.fn != "sdist") throw UnsupportedError("--describe is available for --fn sdist only");
    std::cout << describe(signed_distance_subdiff(as_hpolyhedron(need_omega(s)), xbar)).dump() << '\n';
    return kOk;
  }
  const Vector v = need_point(o.candidate, "--candidate", xbar.size());
  std::string tag;
  bool member = false;
  if (o.fn == "mintime") {
    const auto r = mintime_subdiff_contains(need_dynamics(s), need_omega(s), xbar, v, s.tol);
    tag = to_string(r.where);
    member = r.member;
  } else if (o.fn == "sdist") {
    const HPolyhedron om = as_hpolyhedron(need_omega(s));
    tag = to_string(signed_distance(om, xbar).region);
    member = signed_distance_subdiff(om, xbar).membership(v);
  } else if (o.fn == "signed" || o.fn == "mu") {
    const Dynamics& f = need_dynamics(s);
    const HPolyhedron om = as_hpolyhedron(need_omega(s));
    tag = to_string(classify_region(f, om, xbar));
    member = o.fn == "signed" ? delta_subdiff_contains(f, om, xbar, v, s.tol) : mu_subdiff_contains(f, om, xbar, v, s.tol);
  } else if (o.fn == "gauge") {
    tag = "gauge";
    member = gauge_subdiff_contains(need_dynamics(s), xbar, v, s.tol);
  } else {
    throw ValidationError("--fn: unknown function \"" + o.fn + "\"");
  }
  std::cout << tag << ": " << (member ? "member" : "nonmember") << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  const std::uint64_t seed = o.seed.empty() ? kDefaultSeed : parse_seed(o.seed);
  const auto results = run_suites(o.suite, seed);
  bool pass = true;
  json suites = json::array();
  for (const auto& r : results) {
    json reps = json::array();
    for (const auto& c : r.reports) reps.push_back(report_to_json(c));
    suites.push_back({{"suite", r.suite}, {"pass", r.pass()}, {"reports", reps}});
    pass = pass && r.pass();
  }
  const json bundle{{"seed", seed}, {"pass", pass}, {"suites", suites}};
  std::ofstream file;
  *open_out(o.out, file) << bundle.dump(2) << '\n';
  if (!o.out.empty()) {
    for (const auto& r : results) {
      for (const auto& c : r.reports) {
        if (!c.pass) std::cerr << "FAIL " << c.name << " worst " << format_number(c.worst_violation) << '\n';
      }
      std::cout << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << '\n';
    }
  }
  return pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal time functions over convex sets"};
  app.require_subcommand(1);
  Options o;

  auto scene_flags = [&](CLI::App* c) {
    c->add_option("--scene", o.scene, "Scene JSON file")->required();
    c->add_option("--tol", o.tol, "Membership tolerance");
    c->add_option("--seed", o.seed, "Seed (decimal or 0x hex)");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate a function at a point");
  scene_flags(eval);
  eval->add_option("--fn", o.fn, "gauge | mintime | signed | sdist | mu");
  eval->add_option("--point", o.point, "Comma-separated coordinates")->required();

  auto* grid = app.add_subcommand("grid", "Rasterize a 2D function to CSV");
  scene_flags(grid);
  grid->add_option("--fn", o.fn, "gauge | mintime | signed | sdist | mu");
  grid->add_option("--bbox", o.bbox, "x0,y0,x1,y1");
  grid->add_option("--res", o.res, "Nodes per axis");
  grid->add_option("--out", o.out, "Output CSV (default stdout)");

  auto* sub = app.add_subcommand("subdiff", "Subdifferential membership or description");
  scene_flags(sub);
  sub->add_option("--fn", o.fn, "mintime | sdist | signed | mu | gauge");
  sub->add_option("--point", o.point, "Base point")->required();
  sub->add_option("--candidate", o.candidate, "Candidate subgradient");
  sub->add_flag("--describe", o.describe, "Print the exact description (sdist)");

  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  ver->add_option("suite", o.suite, "gauge | mintime | signed | sdist | all");
  ver->add_option("--seed", o.seed, "Seed (decimal or 0x hex)");
  ver->add_option("--out", o.out, "Output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*grid) return cmd_grid(o);
    if (*sub) return cmd_subdiff(o);
    return cmd_verify(o);
  } catch (const SchemaError& e) {
    std::cerr << "error: schema: " << e.what() << '\n';
    return kInvalid;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const NotAttainedError& e) {
    std::cerr << "error: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
}
