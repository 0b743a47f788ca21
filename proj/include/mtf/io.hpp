#ifndef MTF_IO_HPP
#define MTF_IO_HPP

#include "mtf/geometry.hpp"
#include "mtf/oracle.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace mtf {

/// Malformed scene or set document. `field` is a JSON pointer such as "/omega/A/1".
class SchemaError : public ValidationError {
public:
  SchemaError(std::string field, const std::string& msg)
      : ValidationError(field + ": " + msg), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

struct Scene {
  std::optional<ConvexSet> omega;
  std::optional<Dynamics> dynamics;
  double tol = kMembershipTol;
  std::uint64_t seed = kDefaultSeed;
};

/// {"type":"hpoly","A":[[...]],"b":[...]} | {"type":"vpoly","vertices":[[...]],"rays":[[...]]}
/// | {"type":"ball","center":[...],"radius":r}. Points are rows in the document.
ConvexSet parse_set(const nlohmann::json& j, const std::string& path = "");

Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& file);

nlohmann::json set_to_json(const ConvexSet& s);
nlohmann::json vector_to_json(const Vector& v);
/// Columns as a list of points.
nlohmann::json points_to_json(const Matrix& cols);

/// Shortest round-trip decimal; integral values keep a trailing ".0";
/// infinities print as "inf" / "-inf".
std::string format_number(double x);

/// Finite doubles as numbers, infinities as the strings "inf" / "-inf".
nlohmann::json number_to_json(double x);

/// "1,2.5,-3" -> vector. Throws ValidationError on malformed input.
Vector parse_csv_vector(const std::string& text);

nlohmann::json report_to_json(const CertReport& r);

}  // namespace mtf

#endif  // MTF_IO_HPP
