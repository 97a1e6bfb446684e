#include "wittmod/serialize.hpp"

#include <string>

#include "wittmod/errors.hpp"

namespace wittmod {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Scalar scalar_from_json(const json& j, const char* field) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw ParseError(std::string("field '") + field + "' must be a \"p/q\" string or an integer");
}

CVec cvec_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("field '") + field + "' must be an array");
  std::vector<Scalar> v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, field));
  return CVec(std::move(v));
}

const json& require(const json& j, const char* field) {
  if (!j.contains(field)) throw ParseError(std::string("module descriptor lacks '") + field + "'");
  return j.at(field);
}

}  // namespace

ordered_json scalars_json(const CVec& v) { return scalars_json(v.entries()); }

ordered_json scalars_json(const std::vector<Scalar>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json to_json(const OmegaModule& m) {
  ordered_json j;
  j["family"] = "omega";
  j["n"] = m.rank();
  j["b"] = to_string(m.b());
  j["lambda"] = scalars_json(m.lambda());
  return j;
}

ordered_json to_json(const WeightModule& m) {
  ordered_json j;
  j["family"] = "weight";
  j["n"] = m.rank();
  j["b"] = to_string(m.b());
  j["alpha"] = scalars_json(m.alpha());
  j["N"] = m.box();
  return j;
}

ordered_json to_json(const ModuleDescriptor& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

ModuleDescriptor module_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("module descriptor must be a JSON object");
  const json& fj = require(j, "family");
  if (!fj.is_string()) throw ParseError("field 'family' must be a string");
  const std::string family = fj.get<std::string>();
  const json& nj = require(j, "n");
  if (!nj.is_number_integer() || nj.get<long>() < 1) throw ParseError("field 'n' must be a positive integer");
  const auto n = nj.get<std::size_t>();
  const Scalar b = scalar_from_json(require(j, "b"), "b");
  if (family == "omega") return OmegaModule(n, b, cvec_from_json(require(j, "lambda"), "lambda"));
  if (family == "weight") {
    const json& box = require(j, "N");
    if (!box.is_number_integer()) throw ParseError("field 'N' must be an integer");
    return WeightModule(n, b, cvec_from_json(require(j, "alpha"), "alpha"), box.get<int>());
  }
  throw ParseError("unknown module family '" + family + "'");
}

}  // namespace wittmod
