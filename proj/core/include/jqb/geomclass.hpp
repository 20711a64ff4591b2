#pragma once

// Coefficient-sum sufficient conditions for h2 / h3:
//
//   starlike of order alpha  <=  sum_{n>=2} (n - alpha)   |a_n| <= 1 - alpha
//   convex of order alpha    <=  sum_{n>=2} n (n - alpha) |a_n| <= 1 - alpha
//
// With the majorant |b_n| <= rho^{n-1} both sums are bounded by the closed
// form A - alpha B, which is what kappa_closed_bound checks. The closed form
// needs rho < 1, i.e. the positivity condition
//
//   Second: 4(1-q)(1-q^nu) - q^nu > 0,   Third: (1-q)(1-q^nu) - sqrt(q) > 0.

#include <array>
#include <string_view>

#include "jqb/qbessel.hpp"
#include "jqb/qcore.hpp"

namespace jqb {

enum class ConditionId {
  Positivity2,
  Positivity3,
  StarlikeBound2,
  ConvexBound2,
  StarlikeBound3,
  ConvexBound3,
  P0Bound2,
  P0Bound3,
  CorI,
  CorII,
  CorIII,
  CorVI,
};

inline constexpr std::array<ConditionId, 12> kAllConditions = {
    ConditionId::Positivity2,    ConditionId::Positivity3,  ConditionId::StarlikeBound2,
    ConditionId::ConvexBound2,   ConditionId::StarlikeBound3, ConditionId::ConvexBound3,
    ConditionId::P0Bound2,       ConditionId::P0Bound3,     ConditionId::CorI,
    ConditionId::CorII,          ConditionId::CorIII,       ConditionId::CorVI,
};

[[nodiscard]] std::string_view to_string(ConditionId id) noexcept;

/// How lhs_value is compared against rhs_value.
enum class Relation {
  Greater,  ///< lhs > rhs (strict; ties fail)
  Less,     ///< lhs < rhs (strict; ties fail)
  AtMost,   ///< lhs <= rhs (ties hold)
};

[[nodiscard]] std::string_view to_string(Relation rel) noexcept;

struct ConditionReport {
  ConditionId id;
  double lhs_value;
  double rhs_value;
  Relation relation;
  bool holds;
};

/// Builds a report whose verdict is derived from the comparison.
[[nodiscard]] ConditionReport make_report(ConditionId id, double lhs, double rhs, Relation rel) noexcept;

enum class Property { Starlike, Convex };

[[nodiscard]] const char* to_string(Property p) noexcept;

/// A critical order alpha*. When direction_valid (B < 1) the sufficient
/// condition holds exactly for alpha <= value; when B > 1 it holds exactly for
/// alpha >= value. Values above 1 are kept as computed; clipped() gives the
/// usable range of alpha.
struct AlphaThreshold {
  double value;
  bool direction_valid;

  [[nodiscard]] bool exceeds_unit() const noexcept { return value >= 1.0; }
  [[nodiscard]] double clipped() const noexcept { return value < 1.0 ? value : 1.0; }
};

/// The closed form A - alpha B bounding the weighted coefficient sum.
struct KappaClosedForm {
  double a;
  double b;
};

/// Second: 4C - q^nu > 0, Third: C - sqrt(q) > 0, with C = (1-q)(1-q^nu).
/// For nu <= 0 the left side is never positive.
[[nodiscard]] ConditionReport positivity_condition(Family kind, const QDomain& qd);

/// A and B for the given family and property. Throws PreconditionError when
/// the positivity condition fails.
///
///   Second/Starlike: A = p(8C-p)/D^2,                B = p/D
///   Second/Convex:   A = p(64C^2-12pC+p^2)/D^3,      B = p(8C-p)/D^2
///   Third/Starlike:  A = (2sC-q)/E^2,                B = s/E
///   Third/Convex:    A = (4sC^2-3qC+qs)/E^3,         B = (2sC-q)/E^2
///
/// with p = q^nu, s = sqrt(q), D = 4C - p, E = C - s.
[[nodiscard]] KappaClosedForm kappa_closed_form(Family kind, Property property, const QDomain& qd);

/// Checks A - alpha B <= 1 - alpha. alpha must lie in [0,1).
[[nodiscard]] ConditionReport kappa_closed_bound(Family kind, Property property, const QDomain& qd,
                                                 double alpha);

/// (1 - A)/(1 - B); direction_valid iff B < 1.
[[nodiscard]] AlphaThreshold alpha_threshold(Family kind, Property property, const QDomain& qd);

/// Weighted coefficient sum over n >= 2: (n - alpha)|a_n| for Starlike,
/// n (n - alpha)|a_n| for Convex, plus tail_bound times the weight at N+1
/// as an estimate of the truncated part. f is starlike / convex of order
/// alpha when the result is <= 1 - alpha.
[[nodiscard]] double kappa_direct(const CoefficientSeries& s, double alpha, Property weight);

/// Largest alpha (exclusive) for which h/z is certified in P0(alpha):
/// (4C-2p)/(4C-p) for Second, (C-2s)/(C-s) for Third.
/// Throws PreconditionError when the positivity condition fails.
[[nodiscard]] AlphaThreshold p0_alpha_bound(Family kind, const QDomain& qd);

/// |h(z)/z - 1| <= B0 with B0 = p/D (Second) or s/E (Third); h/z is in
/// P0(alpha) when B0/(1-alpha) < 1. Reported as lhs = B0/(1-alpha), rhs = 1.
/// Throws PreconditionError when the positivity condition fails.
[[nodiscard]] ConditionReport p0_condition(Family kind, const QDomain& qd, double alpha);

/// The four corollary conditions in the order CorI, CorII, CorIII, CorVI:
///   2C - p > 0       => h2/z in P
///   C - 2s > 0       => h3/z in P
///   4C - 3p > 0      => h2/z in P0(1/2)
///   C - 3s > 0       => h3/z in P0(1/2)
[[nodiscard]] std::array<ConditionReport, 4> corollary_flags(const QDomain& qd);

/// gamma = 1 - 2(1-alpha)(1-beta), the order of P0(alpha) * P0(beta).
[[nodiscard]] double gamma_combine(double alpha, double beta);

}  // namespace jqb
