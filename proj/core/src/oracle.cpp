#include "jqb/oracle.hpp"

#include <cmath>
#include <numbers>

#include "jqb/errors.hpp"

namespace jqb {

using cplx = std::complex<double>;

namespace {

struct Jet {
  cplx f;
  cplx d1;
  cplx d2;
};

// f, f', f'' of sum_{n>=1} a_n z^n in one Horner pass.
Jet eval_jet(std::span<const cplx> a, cplx z) {
  cplx p = a.back();
  cplx d1{0.0, 0.0};
  cplx d2{0.0, 0.0};
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    d2 = d2 * z + d1;
    d1 = d1 * z + p;
    p = p * z + a[k];
  }
  // The loop stopped at a_1; one more step for the zero constant term.
  d2 = d2 * z + d1;
  d1 = d1 * z + p;
  p = p * z;
  return {p, d1, 2.0 * d2};
}

// f(z)/z = sum a_n z^{n-1}, no division needed.
cplx eval_over_z(std::span<const cplx> a, cplx z) {
  cplx acc{0.0, 0.0};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

void DiskGrid::validate() const {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("grid radius must lie in (0,1)");
  if (angular_count < 1 || radial_count < 1) throw DomainError("grid counts must be >= 1");
}

std::vector<double> DiskGrid::radii() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(radial_count));
  const double gap = 1.0 - radius;
  for (int j = 0; j < radial_count; ++j) {
    out[static_cast<std::size_t>(j)] =
        j + 1 == radial_count ? radius : 1.0 - std::pow(gap, (j + 1.0) / radial_count);
  }
  return out;
}

double DiskGrid::phase_offset(int ring) const {
  const double frac = std::fmod(ring * (std::numbers::phi - 1.0), 1.0);
  return frac * 2.0 * std::numbers::pi / angular_count;
}

const char* to_string(Functional f) noexcept {
  switch (f) {
    case Functional::StarlikeQuotient: return "starlike_quotient";
    case Functional::ConvexQuotient: return "convex_quotient";
    case Functional::RatioOverZ: return "ratio_over_z";
  }
  return "?";
}

const char* to_string(CheckedProperty p) noexcept {
  switch (p) {
    case CheckedProperty::Starlike: return "starlike";
    case CheckedProperty::Convex: return "convex";
    case CheckedProperty::P0: return "p0";
  }
  return "?";
}

std::vector<cplx> derivative_coeffs(const CoefficientSeries& s, int order) {
  if (order < 0) throw DomainError("derivative order must be >= 0");
  std::vector<cplx> c(s.order() + 1, cplx{0.0, 0.0});
  for (std::size_t n = 1; n <= s.order(); ++n) c[n] = s.coeff(n);
  for (int d = 0; d < order && !c.empty(); ++d) {
    std::vector<cplx> next(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t k = 1; k < c.size(); ++k) next[k - 1] = static_cast<double>(k) * c[k];
    c = std::move(next);
  }
  return c;
}

cplx eval_poly(const std::vector<cplx>& c, cplx z) {
  cplx acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

SampledMinimum min_re_functional(const CoefficientSeries& s, Functional functional, const DiskGrid& grid) {
  const auto radii = grid.radii();
  const auto a = s.coeffs();
  const double step = 2.0 * std::numbers::pi / grid.angular_count;

  SampledMinimum best;
  for (int j = 0; j < grid.radial_count; ++j) {
    const double r = radii[static_cast<std::size_t>(j)];
    const double offset = grid.phase_offset(j);
    for (int k = 0; k < grid.angular_count; ++k) {
      const cplx z = std::polar(r, k * step + offset);
      double value = 0.0;
      switch (functional) {
        case Functional::RatioOverZ:
          value = eval_over_z(a, z).real();
          break;
        case Functional::StarlikeQuotient: {
          const Jet jet = eval_jet(a, z);
          if (std::abs(jet.f) < kSingularDenominator) {
            return {-std::numeric_limits<double>::infinity(), z, true};
          }
          value = (z * jet.d1 / jet.f).real();
          break;
        }
        case Functional::ConvexQuotient: {
          const Jet jet = eval_jet(a, z);
          if (std::abs(jet.d1) < kSingularDenominator) {
            return {-std::numeric_limits<double>::infinity(), z, true};
          }
          value = 1.0 + (z * jet.d2 / jet.d1).real();
          break;
        }
      }
      if (value < best.value) {
        best.value = value;
        best.at = z;
      }
    }
  }
  return best;
}

double integral_mean(const CoefficientSeries& s, double r, double p, int angular_count) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("integral_mean requires r in (0,1)");
  if (!(p > 0.0)) throw DomainError("integral_mean requires p > 0");
  if (angular_count < 1) throw DomainError("angular_count must be >= 1");

  const double step = 2.0 * std::numbers::pi / angular_count;
  if (std::isinf(p)) {
    double sup = 0.0;
    for (int k = 0; k < angular_count; ++k) {
      sup = std::max(sup, std::abs(eval_series(s, std::polar(r, k * step))));
    }
    return sup;
  }
  double sum = 0.0;
  for (int k = 0; k < angular_count; ++k) {
    sum += std::pow(std::abs(eval_series(s, std::polar(r, k * step))), p);
  }
  return std::pow(sum / angular_count, 1.0 / p);
}

CrosscheckReport crosscheck_sufficient_vs_sampled(Family kind, const QDomain& qd, double alpha,
                                                  CheckedProperty property, const DiskGrid& grid,
                                                  const Tolerance& tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0,1)");

  CrosscheckReport report;
  if (positivity_condition(kind, qd).holds) {
    switch (property) {
      case CheckedProperty::Starlike:
        report.certified = kappa_closed_bound(kind, Property::Starlike, qd, alpha).holds;
        break;
      case CheckedProperty::Convex:
        report.certified = kappa_closed_bound(kind, Property::Convex, qd, alpha).holds;
        break;
      case CheckedProperty::P0:
        report.certified = p0_condition(kind, qd, alpha).holds;
        break;
    }
  }

  const Functional functional = property == CheckedProperty::Starlike ? Functional::StarlikeQuotient
                                : property == CheckedProperty::Convex ? Functional::ConvexQuotient
                                                                      : Functional::RatioOverZ;
  report.sampled = min_re_functional(series_h(kind, qd, tol), functional, grid);
  if (report.certified) {
    report.implication_holds = !report.sampled.unbounded && report.sampled.value >= alpha - report.tolerance;
  }
  return report;
}

}  // namespace jqb
