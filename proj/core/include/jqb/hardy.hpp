#pragma once

// Hardy-space classification of h2 / h3 and Hadamard-product results.
//
// A convex function of order alpha that is not one of the exceptional forms
//   k + l z (1 - z e^{i theta})^{2 alpha - 1}   (alpha != 1/2)
//   k + l log(1 - z e^{i theta})                (alpha  = 1/2)
// lies in H^{1/(1-2 alpha)} for alpha < 1/2 and in H^inf for alpha >= 1/2.

#include <optional>

#include "jqb/geomclass.hpp"
#include "jqb/qbessel.hpp"
#include "jqb/qcore.hpp"

namespace jqb {

enum class HardyKind { FiniteExponent, Infinity, Unclassified };

/// Which argument produced the verdict.
enum class HardyBasis {
  ConvexOrder,      ///< convexity bound at alpha, alpha != 1/2
  ConvexOrderHalf,  ///< alpha == 1/2, covered by the alpha >= 1/2 case
  None,
};

[[nodiscard]] const char* to_string(HardyKind k) noexcept;
[[nodiscard]] const char* to_string(HardyBasis b) noexcept;

struct HardyMembership {
  HardyKind kind = HardyKind::Unclassified;
  std::optional<double> exponent;  ///< present iff kind == FiniteExponent
  HardyBasis basis = HardyBasis::None;
};

/// Residual of the best fit of f's leading coefficients to the exceptional
/// form for the given alpha. The normalization a_0 = 0, a_1 = 1 fixes k and
/// l; a_2 fixes theta (when |a_2| matches the form's modulus); the residual
/// is |a_2 - fitted a_2| + |a_3 - fitted a_3|. Zero means f's first three
/// nontrivial coefficients are consistent with an exceptional form.
[[nodiscard]] double exceptional_form_residual(const CoefficientSeries& f, double alpha);

/// H^p membership of h2 / h3 under the positivity condition and the
/// convexity bound at alpha. Returns Unclassified (never throws) when either
/// hypothesis fails or the coefficients match an exceptional form.
[[nodiscard]] HardyMembership hardy_classify(Family kind, const QDomain& qd, double alpha);

/// Coefficient-wise product truncated at the shorter order. The tail bound is
/// the smaller of the two cross bounds sum|a_n| * sup|b_n| over n beyond the
/// truncation.
[[nodiscard]] CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g);

/// n |a_n| <= 2 for every stored n >= 2. Necessary for f in R; used as an
/// admission filter on user-supplied f.
[[nodiscard]] bool macgregor_check(const CoefficientSeries& f);

/// The hypothesis for a bounded Hadamard product: CorIII (4C - 3q^nu > 0) for
/// Second, CorVI (C - 3 sqrt(q) > 0) for Third.
[[nodiscard]] ConditionReport hadamard_bound_hypothesis(Family kind, const QDomain& qd);

/// 1 + (2/rho)(log(1/(1-rho)) - rho), an upper bound on |h * f| over the
/// closed disk for every f with n|a_n| <= 2. Throws PreconditionError when
/// hadamard_bound_hypothesis fails.
[[nodiscard]] double hadamard_sup_bound(Family kind, const QDomain& qd);

enum class VerdictFailure { None, CoefficientFilter, Hypothesis };

[[nodiscard]] const char* to_string(VerdictFailure f) noexcept;

/// u = h * f lies in H^inf and in R, provided f is in R. The residual
/// hypothesis f in R cannot be decided from finitely many coefficients, so a
/// certified verdict reads "certified under f in R".
struct HadamardBoundVerdict {
  bool certified = false;
  std::optional<double> sup_bound;
  VerdictFailure failure = VerdictFailure::None;
  ConditionReport hypothesis;
};

[[nodiscard]] HadamardBoundVerdict hadamard_bound_verdict(Family kind, const QDomain& qd,
                                                          const CoefficientSeries& f);

/// h * f lies in R0(gamma), gamma = 1 - 2(1-alpha)(1-beta), when h/z is in
/// P0(alpha) and f is in R0(beta). failed_condition names the first
/// hypothesis that does not hold.
struct HadamardOrderVerdict {
  bool certified = false;
  double gamma = 0.0;
  std::optional<ConditionId> failed_condition;
};

/// alpha must lie in [0,1) and beta < 1 (DomainError otherwise).
[[nodiscard]] HadamardOrderVerdict hadamard_order_verdict(Family kind, const QDomain& qd, double alpha,
                                                          double beta);

}  // namespace jqb
