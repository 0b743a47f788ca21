#include "mtf/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mtf {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw SchemaError(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw SchemaError(path, "expected a finite number");
  return x;
}

Vector vector_field(const json& j, const std::string& path, Index dim = -1) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of numbers");
  if (dim >= 0 && static_cast<Index>(j.size()) != dim) {
    throw SchemaError(path, "expected " + std::to_string(dim) + " entries, got " + std::to_string(j.size()));
  }
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = number(j[i], at(path, i));
  return v;
}

// Rows of the document; `dim` < 0 takes the length of the first row.
Matrix rows_field(const json& j, const std::string& path, Index dim) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
  if (dim < 0) {
    if (j.empty()) throw SchemaError(path, "cannot infer the dimension from an empty list");
    if (!j[0].is_array()) throw SchemaError(at(path, 0), "expected an array of numbers");
    dim = static_cast<Index>(j[0].size());
  }
  Matrix m(static_cast<Index>(j.size()), dim);
  for (std::size_t i = 0; i < j.size(); ++i) m.row(static_cast<Index>(i)) = vector_field(j[i], at(path, i), dim);
  return m;
}

const json& member(const json& j, const std::string& key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

}  // namespace

ConvexSet parse_set(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object with a \"type\" field");
  const json& type = member(j, "type", path);
  if (!type.is_string()) throw SchemaError(at(path, "type"), "expected a string");
  const std::string t = type.get<std::string>();
  try {
    if (t == "hpoly") {
      Matrix A = rows_field(member(j, "A", path), at(path, "A"), -1);
      Vector b = vector_field(member(j, "b", path), at(path, "b"), A.rows());
      return HPolyhedron(std::move(A), std::move(b));
    }
    if (t == "vpoly") {
      Matrix V = rows_field(member(j, "vertices", path), at(path, "vertices"), -1);
      Matrix R(0, V.cols());
      if (j.contains("rays")) R = rows_field(j["rays"], at(path, "rays"), V.cols());
      return VPolytope(V.transpose(), R.transpose());
    }
    if (t == "ball") {
      Vector c = vector_field(member(j, "center", path), at(path, "center"));
      const double r = number(member(j, "radius", path), at(path, "radius"));
      return Ball(std::move(c), r);
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const ValidationError& e) {
    throw SchemaError(path, e.what());
  }
  throw SchemaError(at(path, "type"), "unknown set type \"" + t + "\" (expected hpoly, vpoly or ball)");
}

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "scene must be a JSON object");
  Scene s;
  if (doc.contains("omega")) s.omega = parse_set(doc["omega"], "/omega");
  if (doc.contains("dynamics")) {
    ConvexSet f = parse_set(doc["dynamics"], "/dynamics");
    try {
      s.dynamics.emplace(std::move(f));
    } catch (const ValidationError& e) {
      throw SchemaError("/dynamics", e.what());
    }
  }
  if (s.omega && s.dynamics && s.omega->dim() != s.dynamics->dim()) {
    throw SchemaError("/dynamics", "dimension differs from omega");
  }
  if (doc.contains("tol")) {
    s.tol = number(doc["tol"], "/tol");
    if (!(s.tol >= 0.0)) throw SchemaError("/tol", "must be nonnegative");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw SchemaError("/seed", "expected a nonnegative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
  }
  return s;
}

Scene load_scene(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError("", "cannot open scene file " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(number_to_json(v(i)));
  return out;
}

json points_to_json(const Matrix& cols) {
  json out = json::array();
  for (Index j = 0; j < cols.cols(); ++j) out.push_back(vector_to_json(cols.col(j)));
  return out;
}

json set_to_json(const ConvexSet& s) {
  if (const auto* h = s.as<HPolyhedron>()) {
    return {{"type", "hpoly"}, {"A", points_to_json(h->A().transpose())}, {"b", vector_to_json(h->b())}};
  }
  if (const auto* v = s.as<VPolytope>()) {
    return {{"type", "vpoly"}, {"vertices", points_to_json(v->vertices())}, {"rays", points_to_json(v->rays())}};
  }
  const auto& b = *s.as<Ball>();
  return {{"type", "ball"}, {"center", vector_to_json(b.center())}, {"radius", b.radius()}};
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // no "-0.0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

json number_to_json(double x) {
  if (std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  return format_number(x);
}

Vector parse_csv_vector(const std::string& text) {
  std::vector<double> xs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::string tok = text.substr(pos, end - pos);
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size() || !std::isfinite(v)) {
      throw ValidationError("malformed number \"" + tok + "\" in \"" + text + "\"");
    }
    xs.push_back(v);
    pos = end + 1;
  }
  Vector out(static_cast<Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) out(static_cast<Index>(i)) = xs[i];
  return out;
}

json report_to_json(const CertReport& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["worst_violation"] = number_to_json(r.worst_violation);
  j["tolerance"] = number_to_json(r.tolerance);
  j["witness"] = r.witness ? vector_to_json(*r.witness) : json(nullptr);
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["detail"] = r.detail;
  return j;
}

}  // namespace mtf
