#pragma once

#include <json.hpp>

#include "rbfcub/cubature.hpp"
#include "rbfcub/pointset.hpp"

namespace rbfcub::detail {

nlohmann::ordered_json domain_to_json(const Rectangle& rect);
nlohmann::ordered_json rule_to_json(const CubatureRule& rule);
nlohmann::ordered_json report_to_json(const StabilityReport& report);

}  // namespace rbfcub::detail
