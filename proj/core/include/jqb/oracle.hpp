#pragma once

// Brute-force checks that are independent of the closed-form bounds:
// sampling the defining functionals over a disk grid, integral means on
// circles, and the implication "certificate => sampled minimum >= alpha".

#include <complex>
#include <limits>
#include <vector>

#include "jqb/geomclass.hpp"
#include "jqb/qbessel.hpp"
#include "jqb/qcore.hpp"

namespace jqb {

/// Sample points r_j e^{i(2 pi k / M + phi_j)} with radial_count rings.
/// Ring j (0-based) sits at 1 - (1 - radius)^{(j+1)/R}, so the gaps to the
/// unit circle shrink geometrically and the last ring is exactly `radius`.
/// phi_j is a fixed golden-ratio rotation of ring j (deterministic).
struct DiskGrid {
  double radius = 0.999;
  int angular_count = 4096;
  int radial_count = 16;

  void validate() const;
  [[nodiscard]] std::vector<double> radii() const;
  [[nodiscard]] double phase_offset(int ring) const;
};

inline constexpr double kImplicationTolerance = 1e-3;
/// |f| or |f'| below this at a sample marks the functional as unbounded there.
inline constexpr double kSingularDenominator = 1e-12;

enum class Functional {
  StarlikeQuotient,  ///< Re(z f'(z) / f(z))
  ConvexQuotient,    ///< Re(1 + z f''(z) / f'(z))
  RatioOverZ,        ///< Re(f(z) / z)
};

[[nodiscard]] const char* to_string(Functional f) noexcept;

struct SampledMinimum {
  double value = std::numeric_limits<double>::infinity();
  std::complex<double> at{};
  /// A denominator fell below kSingularDenominator at some sample; value is
  /// then -inf ("functional unbounded near sample").
  bool unbounded = false;
};

/// Coefficients of the `order`-th derivative indexed by degree (c[k] is the
/// coefficient of z^k); the shift is exact: (a_n z^n)' = n a_n z^{n-1}.
[[nodiscard]] std::vector<std::complex<double>> derivative_coeffs(const CoefficientSeries& s, int order);

/// Evaluates a degree-indexed polynomial at z (Horner).
[[nodiscard]] std::complex<double> eval_poly(const std::vector<std::complex<double>>& c, std::complex<double> z);

/// Minimum of the selected functional over every grid point. The reduction
/// runs in a fixed order so the result (and its argmin) is reproducible.
[[nodiscard]] SampledMinimum min_re_functional(const CoefficientSeries& s, Functional functional,
                                               const DiskGrid& grid = {});

inline constexpr double kSupNorm = std::numeric_limits<double>::infinity();

/// M_p(r, f) by the trapezoidal rule on `angular_count` equispaced angles;
/// p = kSupNorm gives the maximum modulus over the samples.
[[nodiscard]] double integral_mean(const CoefficientSeries& s, double r, double p, int angular_count = 4096);

enum class CheckedProperty { Starlike, Convex, P0 };

[[nodiscard]] const char* to_string(CheckedProperty p) noexcept;

struct CrosscheckReport {
  bool certified = false;          ///< closed-form certificate verdict
  SampledMinimum sampled;          ///< measured minimum of the functional
  double tolerance = kImplicationTolerance;
  /// certified implies sampled.value >= alpha - tolerance. Vacuously true
  /// when not certified; the converse is never claimed.
  bool implication_holds = true;
};

/// Runs the closed-form certificate and the grid sampling side by side.
[[nodiscard]] CrosscheckReport crosscheck_sufficient_vs_sampled(Family kind, const QDomain& qd, double alpha,
                                                                CheckedProperty property,
                                                                const DiskGrid& grid = {},
                                                                const Tolerance& tol = {});

}  // namespace jqb
