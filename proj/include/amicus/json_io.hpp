#pragma once

#include <nlohmann/json.hpp>

#include "amicus/catalogue.hpp"
#include "amicus/certificates.hpp"
#include "amicus/search.hpp"

namespace amicus {

// Values above 64 bits serialize as decimal strings; everything else stays a
// plain JSON number.
nlohmann::json json_u128(u128 v);
u128 u128_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FactoredInteger& n);
FactoredInteger factored_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AmicablePair& pair);
nlohmann::json to_json(const SearchOutcome& outcome);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const VerificationReport& report);

}  // namespace amicus
