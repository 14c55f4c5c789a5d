#include "lozenge/io.hpp"

namespace lozenge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

// Shape errors are ParseErrors; ordering violations are DomainErrors from
// DentSet itself.
DentSet dent_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of integers");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an array of integers");
    out.push_back(e.get<int>());
  }
  return DentSet(std::move(out));
}

Json dents_json(const DentSet& s) { return Json(s.positions()); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Region parse_region(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("\"type\" must be a string");
  if (j.contains("barrier")) throw ParseError("barrier: not implemented");
  const std::string t = type.get<std::string>();
  if (t == "hexagon")
    return validate_hexagon(int_field(j, "a"), int_field(j, "b"), int_field(j, "c"), dent_field(j, "X"),
                            dent_field(j, "Y"));
  if (t == "trapezoid") return Trapezoid::make(int_field(j, "m"), int_field(j, "n"), dent_field(j, "S"));
  throw ParseError("unknown region type \"" + t + "\"");
}

Json to_json(const DentedHexagon& h) {
  Json j;
  j["type"] = "hexagon";
  j["a"] = h.a();
  j["b"] = h.b();
  j["c"] = h.c();
  j["X"] = dents_json(h.up_dents());
  j["Y"] = dents_json(h.down_dents());
  return j;
}

Json to_json(const Trapezoid& t) {
  Json j;
  j["type"] = "trapezoid";
  j["m"] = t.m();
  j["n"] = t.n();
  j["S"] = dents_json(t.dents());
  return j;
}

Json to_json(const Region& r) {
  return std::visit([](const auto& x) { return to_json(x); }, r);
}

ShuffleDescriptor parse_shuffle(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (j.contains("barrier")) throw ParseError("barrier: not implemented");
  return {field(j, "source"), dent_field(j, "Xp"), dent_field(j, "Yp")};
}

CellGrid build_cells(const Region& r) {
  return std::visit([](const auto& x) { return build_cells(x); }, r);
}

std::string describe(const Region& r) {
  return std::visit([](const auto& x) { return describe(x); }, r);
}

Json coefficients_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  if (p.is_zero()) out.push_back("0");
  return out;
}

}  // namespace lozenge
