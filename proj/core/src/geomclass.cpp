#include "jqb/geomclass.hpp"

#include <cmath>
#include <string>

#include "jqb/errors.hpp"

namespace jqb {

namespace {

struct Pieces {
  double q;
  double p;  // q^nu
  double s;  // sqrt(q)
  double c;  // (1-q)(1-q^nu)
};

Pieces pieces(const QDomain& qd) {
  const double q = qd.q();
  const double p = std::pow(q, qd.nu());
  return {q, p, std::sqrt(q), (1.0 - q) * (1.0 - p)};
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in [0,1)");
  }
}

void require_positivity(Family kind, const QDomain& qd) {
  if (!positivity_condition(kind, qd).holds) {
    throw PreconditionError(std::string("positivity condition fails for family ") + to_string(kind));
  }
}

}  // namespace

std::string_view to_string(ConditionId id) noexcept {
  switch (id) {
    case ConditionId::Positivity2: return "Positivity2";
    case ConditionId::Positivity3: return "Positivity3";
    case ConditionId::StarlikeBound2: return "StarlikeBound2";
    case ConditionId::ConvexBound2: return "ConvexBound2";
    case ConditionId::StarlikeBound3: return "StarlikeBound3";
    case ConditionId::ConvexBound3: return "ConvexBound3";
    case ConditionId::P0Bound2: return "P0Bound2";
    case ConditionId::P0Bound3: return "P0Bound3";
    case ConditionId::CorI: return "CorI";
    case ConditionId::CorII: return "CorII";
    case ConditionId::CorIII: return "CorIII";
    case ConditionId::CorVI: return "CorVI";
  }
  return "?";
}

std::string_view to_string(Relation rel) noexcept {
  switch (rel) {
    case Relation::Greater: return ">";
    case Relation::Less: return "<";
    case Relation::AtMost: return "<=";
  }
  return "?";
}

const char* to_string(Property p) noexcept { return p == Property::Starlike ? "starlike" : "convex"; }

ConditionReport make_report(ConditionId id, double lhs, double rhs, Relation rel) noexcept {
  bool holds = false;
  switch (rel) {
    case Relation::Greater: holds = lhs > rhs; break;
    case Relation::Less: holds = lhs < rhs; break;
    case Relation::AtMost: holds = lhs <= rhs; break;
  }
  return {id, lhs, rhs, rel, holds};
}

ConditionReport positivity_condition(Family kind, const QDomain& qd) {
  const auto [q, p, s, c] = pieces(qd);
  (void)q;
  if (kind == Family::Second) {
    return make_report(ConditionId::Positivity2, 4.0 * c - p, 0.0, Relation::Greater);
  }
  return make_report(ConditionId::Positivity3, c - s, 0.0, Relation::Greater);
}

KappaClosedForm kappa_closed_form(Family kind, Property property, const QDomain& qd) {
  require_positivity(kind, qd);
  const auto [q, p, s, c] = pieces(qd);
  if (kind == Family::Second) {
    const double d = 4.0 * c - p;
    const double starlike_a = p * (8.0 * c - p) / (d * d);
    if (property == Property::Starlike) {
      return {starlike_a, p / d};
    }
    return {p * (64.0 * c * c - 12.0 * p * c + p * p) / (d * d * d), starlike_a};
  }
  const double e = c - s;
  const double starlike_a = (2.0 * s * c - q) / (e * e);
  if (property == Property::Starlike) {
    return {starlike_a, s / e};
  }
  return {(4.0 * s * c * c - 3.0 * q * c + q * s) / (e * e * e), starlike_a};
}

ConditionReport kappa_closed_bound(Family kind, Property property, const QDomain& qd, double alpha) {
  require_alpha(alpha);
  const auto [a, b] = kappa_closed_form(kind, property, qd);
  ConditionId id{};
  if (kind == Family::Second) {
    id = property == Property::Starlike ? ConditionId::StarlikeBound2 : ConditionId::ConvexBound2;
  } else {
    id = property == Property::Starlike ? ConditionId::StarlikeBound3 : ConditionId::ConvexBound3;
  }
  return make_report(id, a - alpha * b, 1.0 - alpha, Relation::AtMost);
}

AlphaThreshold alpha_threshold(Family kind, Property property, const QDomain& qd) {
  const auto [a, b] = kappa_closed_form(kind, property, qd);
  return {(1.0 - a) / (1.0 - b), b < 1.0};
}

double kappa_direct(const CoefficientSeries& s, double alpha, Property weight) {
  const auto w = [&](double n) { return weight == Property::Starlike ? n - alpha : n * (n - alpha); };
  const auto a = s.coeffs();
  double sum = 0.0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    sum += w(static_cast<double>(i + 1)) * std::abs(a[i]);
  }
  return sum + w(static_cast<double>(a.size() + 1)) * s.tail_bound();
}

AlphaThreshold p0_alpha_bound(Family kind, const QDomain& qd) {
  require_positivity(kind, qd);
  const auto [q, p, s, c] = pieces(qd);
  (void)q;
  if (kind == Family::Second) {
    return {(4.0 * c - 2.0 * p) / (4.0 * c - p), true};
  }
  return {(c - 2.0 * s) / (c - s), true};
}

ConditionReport p0_condition(Family kind, const QDomain& qd, double alpha) {
  require_alpha(alpha);
  require_positivity(kind, qd);
  const auto [q, p, s, c] = pieces(qd);
  (void)q;
  const double bound = kind == Family::Second ? p / (4.0 * c - p) : s / (c - s);
  const auto id = kind == Family::Second ? ConditionId::P0Bound2 : ConditionId::P0Bound3;
  return make_report(id, bound / (1.0 - alpha), 1.0, Relation::Less);
}

std::array<ConditionReport, 4> corollary_flags(const QDomain& qd) {
  const auto [q, p, s, c] = pieces(qd);
  (void)q;
  return {
      make_report(ConditionId::CorI, 2.0 * c - p, 0.0, Relation::Greater),
      make_report(ConditionId::CorII, c - 2.0 * s, 0.0, Relation::Greater),
      make_report(ConditionId::CorIII, 4.0 * c - 3.0 * p, 0.0, Relation::Greater),
      make_report(ConditionId::CorVI, c - 3.0 * s, 0.0, Relation::Greater),
  };
}

double gamma_combine(double alpha, double beta) {
  if (!(alpha < 1.0) || !(beta < 1.0)) {
    throw DomainError("gamma_combine requires alpha < 1 and beta < 1");
  }
  return 1.0 - 2.0 * (1.0 - alpha) * (1.0 - beta);
}

}  // namespace jqb
