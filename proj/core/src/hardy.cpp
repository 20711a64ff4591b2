#include "jqb/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "jqb/errors.hpp"

namespace jqb {

using cplx = std::complex<double>;

namespace {

// Threshold below which the exceptional-form residual counts as a match.
constexpr double kExceptionalMatch = 1e-12;

struct CrossPart {
  double abs_sum = 0.0;  // sum of |c_n| over n beyond the cut, including the tail
  double abs_sup = 0.0;  // sup of |c_n| over n beyond the cut
};

CrossPart beyond(const CoefficientSeries& s, std::size_t cut) {
  CrossPart part{s.tail_bound(), s.tail_bound()};
  for (std::size_t n = cut + 1; n <= s.order(); ++n) {
    const double m = std::abs(s.coeff(n));
    part.abs_sum += m;
    part.abs_sup = std::max(part.abs_sup, m);
  }
  return part;
}

}  // namespace

const char* to_string(HardyKind k) noexcept {
  switch (k) {
    case HardyKind::FiniteExponent: return "finite";
    case HardyKind::Infinity: return "infinity";
    case HardyKind::Unclassified: return "unclassified";
  }
  return "?";
}

const char* to_string(HardyBasis b) noexcept {
  switch (b) {
    case HardyBasis::ConvexOrder: return "convex_order";
    case HardyBasis::ConvexOrderHalf: return "convex_order_half";
    case HardyBasis::None: return "none";
  }
  return "?";
}

const char* to_string(VerdictFailure f) noexcept {
  switch (f) {
    case VerdictFailure::None: return "none";
    case VerdictFailure::CoefficientFilter: return "coefficient_filter";
    case VerdictFailure::Hypothesis: return "hypothesis";
  }
  return "?";
}

double exceptional_form_residual(const CoefficientSeries& f, double alpha) {
  const cplx a2 = f.coeff(2);
  const cplx a3 = f.coeff(3);
  const cplx unit = std::abs(a2) > 0.0 ? a2 / std::abs(a2) : cplx{1.0, 0.0};

  cplx fit2;
  cplx fit3;
  if (alpha == 0.5) {
    // -log(1 - z u) = z + u z^2/2 + u^2 z^3/3 + ...
    fit2 = unit / 2.0;
    fit3 = unit * unit / 3.0;
  } else {
    // z (1 - z u)^{2 alpha - 1} = z + (1-2a) u z^2 + (1-2a)(1-a) u^2 z^3 + ...
    const double lead = 1.0 - 2.0 * alpha;
    const cplx u = lead < 0.0 ? -unit : unit;
    fit2 = lead * u;
    fit3 = lead * (1.0 - alpha) * u * u;
  }
  return std::abs(a2 - fit2) + std::abs(a3 - fit3);
}

HardyMembership hardy_classify(Family kind, const QDomain& qd, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in [0,1)");
  }
  if (!positivity_condition(kind, qd).holds) return {};
  if (!kappa_closed_bound(kind, Property::Convex, qd, alpha).holds) return {};
  if (exceptional_form_residual(series_h(kind, qd), alpha) <= kExceptionalMatch) return {};

  if (alpha < 0.5) {
    return {HardyKind::FiniteExponent, 1.0 / (1.0 - 2.0 * alpha), HardyBasis::ConvexOrder};
  }
  if (alpha == 0.5) {
    return {HardyKind::Infinity, std::nullopt, HardyBasis::ConvexOrderHalf};
  }
  return {HardyKind::Infinity, std::nullopt, HardyBasis::ConvexOrder};
}

CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g) {
  const std::size_t cut = std::min(f.order(), g.order());
  std::vector<cplx> coeffs(cut);
  for (std::size_t n = 1; n <= cut; ++n) {
    coeffs[n - 1] = f.coeff(n) * g.coeff(n);
  }
  const CrossPart pf = beyond(f, cut);
  const CrossPart pg = beyond(g, cut);
  const double tail = std::min(pf.abs_sum * pg.abs_sup, pg.abs_sum * pf.abs_sup);
  return CoefficientSeries(std::move(coeffs), tail, "(" + f.label() + ")*(" + g.label() + ")");
}

bool macgregor_check(const CoefficientSeries& f) {
  for (std::size_t n = 2; n <= f.order(); ++n) {
    if (static_cast<double>(n) * std::abs(f.coeff(n)) > 2.0) return false;
  }
  return true;
}

ConditionReport hadamard_bound_hypothesis(Family kind, const QDomain& qd) {
  const auto flags = corollary_flags(qd);
  return kind == Family::Second ? flags[2] : flags[3];
}

double hadamard_sup_bound(Family kind, const QDomain& qd) {
  if (!hadamard_bound_hypothesis(kind, qd).holds) {
    throw PreconditionError(std::string("bounded Hadamard hypothesis fails for family ") + to_string(kind));
  }
  // The hypothesis forces nu > 0 and rho < 1/3.
  const double rho = *majorant_ratio(kind, qd);
  return 1.0 + (2.0 / rho) * geom_sum_closed(GeomSum::S4, rho);
}

HadamardBoundVerdict hadamard_bound_verdict(Family kind, const QDomain& qd, const CoefficientSeries& f) {
  HadamardBoundVerdict verdict;
  verdict.hypothesis = hadamard_bound_hypothesis(kind, qd);
  if (!macgregor_check(f)) {
    verdict.failure = VerdictFailure::CoefficientFilter;
    return verdict;
  }
  if (!verdict.hypothesis.holds) {
    verdict.failure = VerdictFailure::Hypothesis;
    return verdict;
  }
  verdict.certified = true;
  verdict.sup_bound = hadamard_sup_bound(kind, qd);
  return verdict;
}

HadamardOrderVerdict hadamard_order_verdict(Family kind, const QDomain& qd, double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in [0,1)");
  }
  HadamardOrderVerdict verdict;
  verdict.gamma = gamma_combine(alpha, beta);
  const auto positivity = positivity_condition(kind, qd);
  if (!positivity.holds) {
    verdict.failed_condition = positivity.id;
    return verdict;
  }
  const auto p0 = p0_condition(kind, qd, alpha);
  if (!p0.holds) {
    verdict.failed_condition = p0.id;
    return verdict;
  }
  verdict.certified = true;
  return verdict;
}

}  // namespace jqb
