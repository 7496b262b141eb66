#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "powclass/verify.hpp"
#include "powclass/weights.hpp"

namespace powclass {

// Report schemas are deterministic: fixed field order, classes sorted by
// representative, counts as decimal strings so 64-bit consumers cannot
// overflow.

nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

nlohmann::ordered_json baseline_to_json(const BaselineResult& result);
std::string baseline_to_csv(const BaselineResult& result);

nlohmann::ordered_json dist_to_json(
    const VerificationReport& report,
    const std::vector<std::pair<ClassKey, BigRational>>& dist,
    const std::optional<std::pair<std::string, BigRational>>& expectation);
std::string dist_to_csv(
    const VerificationReport& report,
    const std::vector<std::pair<ClassKey, BigRational>>& dist,
    const std::optional<std::pair<std::string, BigRational>>& expectation);

std::string render_json(const nlohmann::ordered_json& doc);

}  // namespace powclass
