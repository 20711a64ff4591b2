#include "jqb/qcore.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "jqb/errors.hpp"

namespace jqb {

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (got " << value << ")";
  return os.str();
}

}  // namespace

QDomain::QDomain(double q, double nu) : q_(q), nu_(nu) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError(describe("q must lie in (0,1)", q));
  }
  if (!(nu > -1.0) || !std::isfinite(nu)) {
    throw DomainError(describe("nu must be > -1", nu));
  }
}

void Tolerance::validate() const {
  if (!(term_cutoff > 0.0) || !std::isfinite(term_cutoff)) {
    throw DomainError(describe("term_cutoff must be positive", term_cutoff));
  }
  if (max_terms < 2) {
    throw DomainError(describe("max_terms must be >= 2", max_terms));
  }
}

double qpochhammer(double a, double q, int n) {
  if (n < 0) {
    throw DomainError(describe("qpochhammer order must be >= 0", n));
  }
  double product = 1.0;
  for (int k = 1; k <= n; ++k) {
    product *= 1.0 - a * std::pow(q, k - 1);
  }
  return product;
}

Certified<double> qpochhammer_inf(double a, double q, const Tolerance& tol) {
  tol.validate();
  if (!(std::abs(a) < 1.0)) {
    throw DomainError(describe("qpochhammer_inf requires |a| < 1", a));
  }
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError(describe("q must lie in (0,1)", q));
  }
  double product = 1.0;
  double deviation = a;  // a q^{k-1}
  for (int k = 1; k <= tol.max_terms; ++k) {
    if (std::abs(deviation) < tol.term_cutoff) {
      // Truncated tail plus one rounding per factor.
      const double rounding = 2.0 * k * std::numeric_limits<double>::epsilon();
      return {product, (tol.term_cutoff / (1.0 - q) + rounding) * std::abs(product)};
    }
    product *= 1.0 - deviation;
    deviation *= q;
  }
  throw ConvergenceError(describe("qpochhammer_inf: max_terms reached before cutoff, q", q));
}

double c_nu(const QDomain& qd, const Tolerance& tol) {
  tol.validate();
  const double q = qd.q();
  const double shift = std::pow(q, qd.nu());
  double log_ratio = 0.0;
  double qk = q;  // q^k
  for (int k = 1; k <= tol.max_terms; ++k) {
    const double shifted = shift * qk;  // q^{nu+k}
    if (qk < tol.term_cutoff && shifted < tol.term_cutoff) {
      return std::exp(log_ratio);
    }
    log_ratio += std::log1p(-qk) - std::log1p(-shifted);
    qk *= q;
  }
  throw ConvergenceError(describe("c_nu: max_terms reached before cutoff, q", q));
}

double geom_sum_closed(GeomSum kind, double r) {
  if (!(std::abs(r) < 1.0)) {
    throw DomainError(describe("geometric sums require |r| < 1", r));
  }
  const double s = 1.0 - r;
  switch (kind) {
    case GeomSum::S1:
      return r / s;
    case GeomSum::S2:
      return r * (2.0 - r) / (s * s);
    case GeomSum::S3:
      return r * (r * r - 3.0 * r + 4.0) / (s * s * s);
    case GeomSum::S4:
      return -std::log1p(-r) - r;
  }
  return 0.0;
}

Certified<std::complex<double>> classical_bessel_j(double nu, std::complex<double> z, const Tolerance& tol) {
  using cplx = std::complex<double>;
  tol.validate();
  if (!(nu > -1.0)) {
    throw DomainError(describe("nu must be > -1", nu));
  }
  if (z == cplx{0.0, 0.0}) {
    if (nu == 0.0) return {cplx{1.0, 0.0}, 0.0};
    if (nu > 0.0) return {cplx{0.0, 0.0}, 0.0};
    throw DomainError(describe("J_nu(0) is singular for nu", nu));
  }

  const cplx log_half = std::log(z / 2.0);
  const cplx leading = std::exp(nu * log_half);  // (z/2)^nu, principal branch
  const double half_abs2 = std::norm(z / 2.0);

  cplx sum{0.0, 0.0};
  for (int n = 0; n < tol.max_terms; ++n) {
    const double log_den = std::lgamma(n + 1.0) + std::lgamma(n + nu + 1.0);
    cplx term = std::exp(2.0 * n * log_half - log_den) * leading;
    if (n % 2 == 1) term = -term;
    sum += term;

    const double ratio = half_abs2 / ((n + 1.0) * (n + 1.0 + nu));
    if (std::abs(term) < tol.term_cutoff && ratio < 0.5) {
      return {sum, std::abs(term) * ratio / (1.0 - ratio)};
    }
  }
  throw ConvergenceError(describe("classical_bessel_j: max_terms reached, |z|", std::abs(z)));
}

}  // namespace jqb
