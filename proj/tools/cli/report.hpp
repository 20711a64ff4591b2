#pragma once

#include <array>
#include <optional>

#include <json.hpp>

#include "jqb/jqb.hpp"

namespace jqb::cli {

/// Every condition in kAllConditions order. Rows that need a failing
/// positivity condition are absent.
[[nodiscard]] std::array<std::optional<ConditionReport>, 12> all_conditions(const QDomain& qd, double alpha);

[[nodiscard]] nlohmann::json to_json(ConditionId id, const std::optional<ConditionReport>& r);

}  // namespace jqb::cli
