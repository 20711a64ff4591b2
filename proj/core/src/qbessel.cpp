#include "jqb/qbessel.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "jqb/errors.hpp"

namespace jqb {

using cplx = std::complex<double>;

CoefficientSeries::CoefficientSeries(std::vector<cplx> coeffs, double tail_bound, std::string label)
    : coeffs_(std::move(coeffs)), tail_bound_(tail_bound), label_(std::move(label)) {
  if (coeffs_.empty() || coeffs_.front() != cplx{1.0, 0.0}) {
    throw DomainError("normalized series requires a_1 = 1");
  }
  if (!(tail_bound_ >= 0.0)) {
    throw DomainError("tail_bound must be nonnegative");
  }
}

CoefficientSeries CoefficientSeries::identity() { return CoefficientSeries({cplx{1.0, 0.0}}, 0.0, "z"); }

cplx CoefficientSeries::coeff(std::size_t n) const noexcept {
  if (n == 0 || n > coeffs_.size()) return {0.0, 0.0};
  return coeffs_[n - 1];
}

const char* to_string(Family kind) noexcept { return kind == Family::Second ? "second" : "third"; }

double coeff_h(Family kind, int n, const QDomain& qd) {
  if (n < 1) {
    throw DomainError("coefficient index must be >= 1");
  }
  if (n == 1) return 1.0;

  const double q = qd.q();
  const double nu = qd.nu();
  const double m = n - 1.0;
  const double log_q = std::log(q);
  const double shift = std::pow(q, nu);

  double log_mag = kind == Family::Second ? m * (m + nu) * log_q - m * std::log(4.0)
                                          : 0.5 * n * m * log_q;
  double qk = q;
  for (int k = 1; k <= n - 1; ++k) {
    log_mag -= std::log1p(-qk) + std::log1p(-shift * qk);
    qk *= q;
  }
  const double mag = std::exp(log_mag);
  return (n % 2 == 0) ? -mag : mag;
}

double coeff_ratio_h(Family kind, int n, const QDomain& qd) {
  if (n < 1) {
    throw DomainError("coefficient index must be >= 1");
  }
  const double q = qd.q();
  const double nu = qd.nu();
  const double den = (1.0 - std::pow(q, n)) * (1.0 - std::pow(q, n + nu));
  if (kind == Family::Second) {
    return -std::pow(q, 2.0 * n - 1.0 + nu) / (4.0 * den);
  }
  return -std::pow(q, n) / den;
}

std::optional<double> majorant_ratio(Family kind, const QDomain& qd) {
  if (!(qd.nu() > 0.0)) return std::nullopt;
  const double q = qd.q();
  const double qn = std::pow(q, qd.nu());
  const double c = (1.0 - q) * (1.0 - qn);
  return kind == Family::Second ? qn / (4.0 * c) : std::sqrt(q) / c;
}

CoefficientSeries series_h(Family kind, const QDomain& qd, const Tolerance& tol) {
  tol.validate();
  std::vector<cplx> coeffs{cplx{1.0, 0.0}};
  std::optional<double> ratio_tail;
  for (int n = 2; n <= tol.max_terms; ++n) {
    const double b = coeff_h(kind, n, qd);
    coeffs.emplace_back(b, 0.0);
    const double r = std::abs(coeff_ratio_h(kind, n, qd));
    if (std::abs(b) < tol.term_cutoff && r < 0.5) {
      ratio_tail = std::abs(b) * r / (1.0 - r);
      break;
    }
  }
  if (!ratio_tail) {
    throw ConvergenceError(std::string("series_h: max_terms reached for family ") + to_string(kind));
  }

  double tail = *ratio_tail;
  if (const auto rho = majorant_ratio(kind, qd); rho && *rho < 1.0) {
    const double majorant_tail = std::pow(*rho, static_cast<double>(coeffs.size())) / (1.0 - *rho);
    tail = std::min(tail, majorant_tail);
  }

  std::ostringstream label;
  label.precision(12);
  label << (kind == Family::Second ? "h2" : "h3") << "(q=" << qd.q() << ",nu=" << qd.nu() << ")";
  return CoefficientSeries(std::move(coeffs), tail, label.str());
}

cplx eval_series(const CoefficientSeries& s, cplx z) {
  if (std::abs(z) > 1.0 + 1e-12) {
    throw DomainError("eval_series requires |z| <= 1");
  }
  const auto a = s.coeffs();
  cplx acc{0.0, 0.0};
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc * z;
}

Certified<cplx> eval_jackson(Family kind, const QDomain& qd, cplx z, const Tolerance& tol) {
  tol.validate();
  const double q = qd.q();
  const double nu = qd.nu();
  const double prefactor = 1.0 / c_nu(qd, tol);  // (q^{nu+1};q)_inf / (q;q)_inf
  const double prefactor_rel_err = 2.2 * tol.term_cutoff / (1.0 - q);

  if (z == cplx{0.0, 0.0}) {
    if (nu == 0.0) return {cplx{prefactor, 0.0}, prefactor * prefactor_rel_err};
    if (nu > 0.0) return {cplx{0.0, 0.0}, 0.0};
    throw DomainError("J_nu(0;q) is singular for nu < 0");
  }

  // Second uses (z/2)^{2n+nu} q^{n(n+nu)}, Third uses z^{2n+nu} q^{n(n+1)/2}.
  const cplx w = kind == Family::Second ? z / 2.0 : z;
  const cplx w2 = w * w;
  cplx term = std::pow(w, nu);
  cplx sum = term;
  double abs_sum = std::abs(term);
  for (int n = 0; n < tol.max_terms; ++n) {
    const double den = (1.0 - std::pow(q, n + 1)) * (1.0 - std::pow(q, nu + n + 1));
    const double qfac = kind == Family::Second ? std::pow(q, 2.0 * n + 1.0 + nu) : std::pow(q, n + 1.0);
    const double ratio = std::norm(w) * qfac / den;
    if (std::abs(term) < tol.term_cutoff && ratio < 0.5) {
      const double tail = std::abs(term) * ratio / (1.0 - ratio);
      // Cancellation: each term carries O(n eps) relative error from the recurrence.
      const double rounding = 4.0 * (n + 2) * std::numeric_limits<double>::epsilon() * abs_sum;
      const cplx value = prefactor * sum;
      return {value, prefactor * (tail + rounding) + std::abs(value) * prefactor_rel_err};
    }
    term *= -w2 * qfac / den;
    sum += term;
    abs_sum += std::abs(term);
  }
  throw ConvergenceError(std::string("eval_jackson: max_terms reached for family ") + to_string(kind));
}

double limit_relation_error(Family kind, double nu, cplx z, double q) {
  const QDomain qd(q, nu);
  // q -> 1 needs ~|log cutoff| / (1-q) factors in c_nu.
  const Tolerance tol{1e-16, 2'000'000};
  const auto lhs = eval_jackson(kind, qd, (1.0 - q) * z, tol);
  const cplx target = kind == Family::Second ? z : 2.0 * z;
  const auto rhs = classical_bessel_j(nu, target, tol);
  return std::abs(lhs.value - rhs.value);
}

}  // namespace jqb
