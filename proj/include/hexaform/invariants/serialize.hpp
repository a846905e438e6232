#pragma once

#include "hexaform/invariants/distribution.hpp"
#include "hexaform/invariants/form_invariants.hpp"

#include <json.hpp>

namespace hexaform::invariants {

nlohmann::json to_json(const FormInvariants& f);
FormInvariants form_invariants_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const FrobeniusSpec& spec);
nlohmann::json to_json(const ValueDistribution& d);
ValueDistribution distribution_from_json(const nlohmann::json& doc);

} // namespace hexaform::invariants
