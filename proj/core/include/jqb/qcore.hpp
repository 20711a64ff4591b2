#pragma once

// q-series primitives: finite and infinite q-Pochhammer symbols, the
// normalizing constant c_nu(q), closed-form geometric sums and the classical
// Bessel function J_nu used as the q -> 1 reference.

#include <complex>

namespace jqb {

/// Parameter pair (q, nu) with 0 < q < 1 and nu > -1. Construction rejects
/// anything else with DomainError.
class QDomain {
 public:
  QDomain(double q, double nu);

  [[nodiscard]] double q() const noexcept { return q_; }
  [[nodiscard]] double nu() const noexcept { return nu_; }

 private:
  double q_;
  double nu_;
};

/// Series truncation policy shared by every evaluator.
struct Tolerance {
  double term_cutoff = 1e-16;
  int max_terms = 512;

  /// Throws DomainError unless term_cutoff > 0 and max_terms >= 2.
  void validate() const;
};

/// A value together with an absolute error bound.
template <class T>
struct Certified {
  T value;
  double error;
};

/// (a;q)_n = prod_{k=1..n} (1 - a q^{k-1}); exactly 1 for n = 0.
[[nodiscard]] double qpochhammer(double a, double q, int n);

/// (a;q)_inf, truncated once |a q^{k-1}| < tol.term_cutoff.
///
/// Requires |a| < 1 and 0 < q < 1 (DomainError otherwise). Throws
/// ConvergenceError when max_terms factors are used before the cutoff is
/// reached. The error bound is (term_cutoff / (1 - q) + 2 K eps) times the
/// partial product, K being the number of factors used.
[[nodiscard]] Certified<double> qpochhammer_inf(double a, double q, const Tolerance& tol = {});

/// c_nu(q) = (q;q)_inf / (q^{nu+1};q)_inf.
///
/// Evaluated as the single product prod_{k>=1} (1-q^k)/(1-q^{nu+k}) summed in
/// log space, which stays finite as q -> 1 where each factor underflows.
[[nodiscard]] double c_nu(const QDomain& qd, const Tolerance& tol = {});

/// Closed forms of four sums over n >= 2, valid for |r| < 1:
///   S1: sum r^{n-1}     = r/(1-r)
///   S2: sum n r^{n-1}   = r(2-r)/(1-r)^2
///   S3: sum n^2 r^{n-1} = r(r^2-3r+4)/(1-r)^3
///   S4: sum r^n / n     = log(1/(1-r)) - r
enum class GeomSum { S1, S2, S3, S4 };

[[nodiscard]] double geom_sum_closed(GeomSum kind, double r);

/// Classical J_nu(z) from its power series, principal branch for (z/2)^nu.
///
/// Gamma(n+nu+1) goes through lgamma so large orders do not overflow. At
/// z = 0 the result is 1 for nu = 0 and 0 for nu > 0; nu in (-1, 0) at z = 0
/// is a pole and throws DomainError.
[[nodiscard]] Certified<std::complex<double>> classical_bessel_j(double nu, std::complex<double> z,
                                                                 const Tolerance& tol = {});

}  // namespace jqb
