#pragma once

// Jackson's second and third q-Bessel functions and their normalized forms
//
//   h2(z;q) = z + sum_{n>=2} (-1)^{n-1} q^{(n-1)(n-1+nu)} z^n
//                           / (4^{n-1} (q;q)_{n-1} (q^{nu+1};q)_{n-1})
//   h3(z;q) = z + sum_{n>=2} (-1)^{n-1} q^{n(n-1)/2} z^n
//                           / ((q;q)_{n-1} (q^{nu+1};q)_{n-1})
//
// The normalized functions are carried purely as coefficient sequences; the
// raw J2/J3 evaluators exist for the limit-relation probe and as a
// cross-check of the normalization identity on the positive real axis.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jqb/qcore.hpp"

namespace jqb {

enum class Family { Second, Third };

/// A normalized power series f(z) = z + a_2 z^2 + ... + a_N z^N (class A)
/// together with a bound on sum_{n>N} |a_n|.
class CoefficientSeries {
 public:
  /// coeffs[0] is a_1 and must equal 1 exactly. Throws DomainError when the
  /// list is empty, a_1 != 1, or tail_bound is negative.
  explicit CoefficientSeries(std::vector<std::complex<double>> coeffs, double tail_bound = 0.0,
                             std::string label = {});

  /// The identity series f(z) = z.
  static CoefficientSeries identity();

  [[nodiscard]] std::span<const std::complex<double>> coeffs() const noexcept { return coeffs_; }
  /// a_n for n >= 1; zero beyond the stored order.
  [[nodiscard]] std::complex<double> coeff(std::size_t n) const noexcept;
  /// Highest stored index N.
  [[nodiscard]] std::size_t order() const noexcept { return coeffs_.size(); }
  [[nodiscard]] double tail_bound() const noexcept { return tail_bound_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }

 private:
  std::vector<std::complex<double>> coeffs_;
  double tail_bound_;
  std::string label_;
};

[[nodiscard]] const char* to_string(Family kind) noexcept;

/// n-th coefficient b_n of h2 / h3 (b_1 = 1). Evaluated in log space so the
/// 4^{n-1} factor cannot overflow.
[[nodiscard]] double coeff_h(Family kind, int n, const QDomain& qd);

/// Exact signed ratio b_{n+1}/b_n for n >= 1:
///   Second: -q^{2n-1+nu} / (4 (1-q^n)(1-q^{n+nu}))
///   Third:  -q^n         / ((1-q^n)(1-q^{n+nu}))
/// Its magnitude is strictly decreasing in n.
[[nodiscard]] double coeff_ratio_h(Family kind, int n, const QDomain& qd);

/// Geometric majorant ratio rho with |b_n| <= rho^{n-1}:
///   Second: q^nu / (4 (1-q)(1-q^nu)),  Third: sqrt(q) / ((1-q)(1-q^nu)).
/// Present only for nu > 0; the value may be >= 1, in which case the
/// majorant carries no information.
[[nodiscard]] std::optional<double> majorant_ratio(Family kind, const QDomain& qd);

/// Coefficients of h2 / h3 truncated at the first N with |b_N| below the
/// cutoff and a term ratio below 1/2. The tail bound is the smaller of the
/// ratio bound |b_N| r/(1-r) and, when rho < 1, the majorant tail
/// rho^N/(1-rho).
[[nodiscard]] CoefficientSeries series_h(Family kind, const QDomain& qd, const Tolerance& tol = {});

/// sum_n a_n z^n over the stored coefficients (Horner). |z| <= 1 is required
/// so that tail_bound bounds the truncation error; DomainError otherwise.
[[nodiscard]] std::complex<double> eval_series(const CoefficientSeries& s, std::complex<double> z);

/// J2(z;q) or J3(z;q) from the defining series, principal branch for z^nu.
/// The error bound covers series truncation and the truncation of c_nu.
[[nodiscard]] Certified<std::complex<double>> eval_jackson(Family kind, const QDomain& qd,
                                                           std::complex<double> z,
                                                           const Tolerance& tol = {});

/// |J_k((1-q) z; q) - J_nu(m z)| with m = 1 for Second and m = 2 for Third.
[[nodiscard]] double limit_relation_error(Family kind, double nu, std::complex<double> z, double q);

}  // namespace jqb
