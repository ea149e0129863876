#pragma once

#include <string>

#include "dentedhex/region.hpp"
#include "dentedhex/verify.hpp"

namespace dhx {

// JSON mirror of DentedHexParams: {"a":..,"b":..,"c":..,"t":..,"u":[..],"v":[..]}.
// Throws std::invalid_argument naming the violated invariant.
DentedHexParams params_from_json(const std::string& text);

std::string params_to_json(const DentedHexParams& p);

// {"format":1,"count":"<decimal>","method":..,"tileable":..,"timings_ms":{..}}
std::string count_report_to_json(const CountReport& rep, bool tileable);

std::string tileable_report_to_json(const DentedHexParams& p, bool tileable, int witness_n);

}  // namespace dhx
