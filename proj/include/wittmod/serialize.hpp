#pragma once

#include <variant>

#include <json.hpp>

#include "wittmod/modules.hpp"
#include "wittmod/scalar.hpp"

namespace wittmod {

using ModuleDescriptor = std::variant<OmegaModule, WeightModule>;

/// {"family":"omega","n":2,"b":"1/2","lambda":["2","3"]}
nlohmann::ordered_json to_json(const OmegaModule& m);
/// {"family":"weight","n":2,"b":"0","alpha":["1/2","0"],"N":4}
nlohmann::ordered_json to_json(const WeightModule& m);
nlohmann::ordered_json to_json(const ModuleDescriptor& m);

/// Scalars may be given as "p/q" strings or JSON integers. Throws ParseError
/// on a malformed descriptor.
ModuleDescriptor module_from_json(const nlohmann::json& j);

nlohmann::ordered_json scalars_json(const CVec& v);
nlohmann::ordered_json scalars_json(const std::vector<Scalar>& v);

}  // namespace wittmod
