#include "report.hpp"

#include <string>

#include "format.hpp"

namespace jqb::cli {

std::array<std::optional<ConditionReport>, 12> all_conditions(const QDomain& qd, double alpha) {
  std::array<std::optional<ConditionReport>, 12> out;
  const auto p2 = positivity_condition(Family::Second, qd);
  const auto p3 = positivity_condition(Family::Third, qd);
  out[0] = p2;
  out[1] = p3;
  if (p2.holds) {
    out[2] = kappa_closed_bound(Family::Second, Property::Starlike, qd, alpha);
    out[3] = kappa_closed_bound(Family::Second, Property::Convex, qd, alpha);
    out[6] = p0_condition(Family::Second, qd, alpha);
  }
  if (p3.holds) {
    out[4] = kappa_closed_bound(Family::Third, Property::Starlike, qd, alpha);
    out[5] = kappa_closed_bound(Family::Third, Property::Convex, qd, alpha);
    out[7] = p0_condition(Family::Third, qd, alpha);
  }
  const auto cor = corollary_flags(qd);
  for (std::size_t i = 0; i < cor.size(); ++i) out[8 + i] = cor[i];
  return out;
}

nlohmann::json to_json(ConditionId id, const std::optional<ConditionReport>& r) {
  nlohmann::json j{{"id", std::string(to_string(id))}};
  if (!r) {
    j["lhs"] = nullptr;
    j["relation"] = nullptr;
    j["rhs"] = nullptr;
    j["status"] = "unclassified";
    return j;
  }
  j["lhs"] = json12(r->lhs_value);
  j["relation"] = std::string(to_string(r->relation));
  j["rhs"] = json12(r->rhs_value);
  j["status"] = r->holds ? "holds" : "fails";
  return j;
}

}  // namespace jqb::cli
