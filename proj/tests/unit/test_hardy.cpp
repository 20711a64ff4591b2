#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "../support/brute.hpp"
#include "jqb/errors.hpp"
#include "jqb/hardy.hpp"

using namespace jqb;
using doctest::Approx;
using cplx = std::complex<double>;

namespace {

CoefficientSeries from_real(const std::vector<double>& a, double tail = 0.0) {
  std::vector<cplx> c;
  c.reserve(a.size());
  for (const double v : a) c.emplace_back(v, 0.0);
  return CoefficientSeries(std::move(c), tail);
}

CoefficientSeries all_ones(std::size_t order) { return from_real(std::vector<double>(order, 1.0)); }

// a_n = (2/n) t^n for n >= 2: n|a_n| = 2|t|^n <= 2. |t| = 1 gives a polynomial.
CoefficientSeries macgregor_series(double t, std::size_t order = 80) {
  std::vector<double> a(order);
  a[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) a[n - 1] = 2.0 / static_cast<double>(n) * std::pow(t, n);
  const double tail = std::abs(t) < 1.0 ? 2.0 * std::pow(std::abs(t), order + 1) / (1.0 - std::abs(t)) : 0.0;
  return from_real(a, tail);
}

CoefficientSeries random_series(brute::Sampler& rng, std::size_t order) {
  std::vector<cplx> c(order);
  c[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) c[n - 1] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return CoefficientSeries(std::move(c));
}

}  // namespace

TEST_CASE("hardy_classify worked values") {
  const auto quarter = hardy_classify(Family::Second, QDomain(0.1, 1.0), 0.25);
  CHECK(quarter.kind == HardyKind::FiniteExponent);
  REQUIRE(quarter.exponent.has_value());
  CHECK(*quarter.exponent == Approx(2.0).epsilon(1e-15));
  CHECK(quarter.basis == HardyBasis::ConvexOrder);

  const auto zero = hardy_classify(Family::Second, QDomain(0.1, 1.0), 0.0);
  CHECK(zero.kind == HardyKind::FiniteExponent);
  CHECK(*zero.exponent == 1.0);

  const QDomain qd(0.1, 1.0);
  const auto three_q = hardy_classify(Family::Second, qd, 0.75);
  if (kappa_closed_bound(Family::Second, Property::Convex, qd, 0.75).holds) {
    CHECK(three_q.kind == HardyKind::Infinity);
    CHECK_FALSE(three_q.exponent.has_value());
  } else {
    CHECK(three_q.kind == HardyKind::Unclassified);
  }

  const auto half = hardy_classify(Family::Second, qd, 0.5);
  CHECK(half.kind == HardyKind::Infinity);
  CHECK(half.basis == HardyBasis::ConvexOrderHalf);
}

TEST_CASE("hardy_classify is Unclassified when a hypothesis fails") {
  const auto no_positivity = hardy_classify(Family::Second, QDomain(0.5, 0.0), 0.25);
  CHECK(no_positivity.kind == HardyKind::Unclassified);
  CHECK(no_positivity.basis == HardyBasis::None);
  CHECK_FALSE(no_positivity.exponent.has_value());

  // Positive but the convexity bound fails: A = 3 for the starlike form already.
  CHECK(hardy_classify(Family::Second, QDomain(0.5, 1.0), 0.0).kind == HardyKind::Unclassified);
  CHECK(hardy_classify(Family::Third, QDomain(0.5, 1.0), 0.0).kind == HardyKind::Unclassified);

  CHECK_THROWS_AS((void)hardy_classify(Family::Second, QDomain(0.1, 1.0), 1.0), DomainError);
  CHECK_THROWS_AS((void)hardy_classify(Family::Second, QDomain(0.1, 1.0), -0.5), DomainError);
}

TEST_CASE("hardy exponent: >= 1 and strictly increasing on [0, 1/2)") {
  const QDomain qd(0.05, 1.5);
  double prev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double alpha = 0.5 * i / 50.0;
    const auto m = hardy_classify(Family::Second, qd, alpha);
    REQUIRE(m.kind == HardyKind::FiniteExponent);
    CHECK(*m.exponent == Approx(1.0 / (1.0 - 2.0 * alpha)).epsilon(1e-15));
    if (alpha == 0.0) {
      CHECK(*m.exponent == 1.0);
    } else {
      CHECK(*m.exponent > 1.0);
      CHECK(*m.exponent > prev);
    }
    prev = *m.exponent;
  }
}

TEST_CASE("h2 / h3 are never an exceptional form") {
  brute::Sampler rng(301);
  for (int i = 0; i < 200; ++i) {
    const QDomain qd(rng.uniform(0.01, 0.95), rng.uniform(-0.9, 3.0));
    const double alpha = rng.uniform(0.0, 0.99);
    for (const Family kind : {Family::Second, Family::Third}) {
      const auto h = series_h(kind, qd);
      CHECK(exceptional_form_residual(h, alpha) > 1e-12);
      CHECK(exceptional_form_residual(h, 0.5) > 1e-12);
    }
  }
}

TEST_CASE("exceptional_form_residual recognizes the exceptional forms") {
  const double theta = 0.7;
  const cplx u = std::polar(1.0, theta);
  // z (1 - z u)^{2a-1}, a = 0.3: binomial series.
  const double a = 0.3;
  const double e = 2.0 * a - 1.0;
  std::vector<cplx> c{1.0, -e * u, e * (e - 1.0) / 2.0 * u * u};
  CHECK(exceptional_form_residual(CoefficientSeries(c), a) < 1e-15);
  // -log(1 - z u) / u, normalized: z + u z^2/2 + u^2 z^3/3.
  std::vector<cplx> l{1.0, u / 2.0, u * u / 3.0};
  CHECK(exceptional_form_residual(CoefficientSeries(l), 0.5) < 1e-15);
  CHECK(exceptional_form_residual(CoefficientSeries(l), 0.25) > 1e-3);
}

TEST_CASE("hadamard worked values and identity") {
  const auto f = series_h(Family::Second, QDomain(0.3, 1.2));
  const auto id = hadamard(f, all_ones(f.order()));
  REQUIRE(id.order() == f.order());
  for (std::size_t n = 1; n <= f.order(); ++n) CHECK(id.coeff(n) == f.coeff(n));

  const auto p = hadamard(from_real({1.0, 0.5}), from_real({1.0, -2.0}));
  CHECK(p.coeff(2) == cplx{-1.0, 0.0});

  const auto z = hadamard(CoefficientSeries::identity(), CoefficientSeries::identity());
  CHECK(z.order() == 1);
  CHECK(z.coeff(1) == cplx{1.0, 0.0});
  CHECK(z.tail_bound() == 0.0);
}

TEST_CASE("hadamard is commutative and associative") {
  brute::Sampler rng(303);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_series(rng, 10 + i % 7);
    const auto g = random_series(rng, 8 + i % 5);
    const auto fg = hadamard(f, g);
    const auto gf = hadamard(g, f);
    REQUIRE(fg.order() == gf.order());
    for (std::size_t n = 1; n <= fg.order(); ++n) CHECK(fg.coeff(n) == gf.coeff(n));
  }
  // Dyadic coefficients multiply without rounding, so the regrouping is exact.
  const auto dyadic = [&rng](std::size_t order) {
    std::vector<double> a(order, 1.0);
    for (std::size_t n = 1; n < order; ++n) a[n] = std::floor(rng.uniform(-64.0, 64.0)) / 64.0;
    return from_real(a);
  };
  for (int i = 0; i < 50; ++i) {
    const auto f = dyadic(9 + i % 4);
    const auto g = dyadic(11);
    const auto h = dyadic(7 + i % 6);
    const auto l = hadamard(hadamard(f, g), h);
    const auto r = hadamard(f, hadamard(g, h));
    REQUIRE(l.order() == r.order());
    for (std::size_t n = 1; n <= l.order(); ++n) CHECK(l.coeff(n) == r.coeff(n));
  }
}

TEST_CASE("hadamard tail bound covers the discarded products") {
  const auto f = series_h(Family::Second, QDomain(0.2, 1.0));
  const auto g = macgregor_series(0.9, 5);
  const auto u = hadamard(f, g);
  CHECK(u.order() == 5);
  long double rest = 0.0L;
  for (std::size_t n = 6; n <= f.order(); ++n) {
    rest += std::abs(f.coeff(n)) * 2.0L / n * std::pow(0.9L, static_cast<long double>(n));
  }
  CHECK(static_cast<double>(rest) <= u.tail_bound());
}

TEST_CASE("macgregor_check") {
  CHECK(macgregor_check(from_real({1.0, 1.0})));
  CHECK_FALSE(macgregor_check(from_real({1.0, 1.1})));
  CHECK(macgregor_check(CoefficientSeries::identity()));
  CHECK_FALSE(macgregor_check(all_ones(5)));
  CHECK(macgregor_check(macgregor_series(1.0, 40)));
  CHECK(macgregor_check(macgregor_series(0.5)));
}

TEST_CASE("hadamard_sup_bound worked values") {
  const QDomain q2(0.1, 1.0);
  CHECK(*majorant_ratio(Family::Second, q2) == Approx(0.1 / 3.24).epsilon(1e-14));
  CHECK(hadamard_sup_bound(Family::Second, q2) == Approx(1.03151433648813).epsilon(1e-13));
  CHECK(std::abs(hadamard_sup_bound(Family::Second, q2) - 1.0314) < 1e-3);

  const QDomain q3(0.01, 1.0);
  CHECK(*majorant_ratio(Family::Third, q3) == Approx(0.1 / 0.9801).epsilon(1e-14));
  CHECK(hadamard_sup_bound(Family::Third, q3) == Approx(1.10954900808901).epsilon(1e-13));

  // rho -> 0
  CHECK(hadamard_sup_bound(Family::Second, QDomain(1e-6, 2.0)) == Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS((void)hadamard_sup_bound(Family::Second, QDomain(0.5, 0.1)), PreconditionError);
}

TEST_CASE("hadamard_sup_bound agrees with 1 + 2 sum rho^{n-1}/n") {
  brute::Sampler rng(307);
  for (int i = 0; i < 100; ++i) {
    const QDomain qd(rng.uniform(0.01, 0.6), rng.uniform(0.1, 3.0));
    for (const Family kind : {Family::Second, Family::Third}) {
      if (!hadamard_bound_hypothesis(kind, qd).holds) continue;
      const double rho = *majorant_ratio(kind, qd);
      CHECK(rho < 1.0 / 3.0);
      long double s = 1.0L;
      for (int n = 2; n < 400; ++n) s += 2.0L * std::pow(static_cast<long double>(rho), n - 1) / n;
      const double bound = hadamard_sup_bound(kind, qd);
      CHECK(bound == Approx(static_cast<double>(s)).epsilon(1e-13));
      CHECK(bound >= 1.0);
    }
  }
}

TEST_CASE("hadamard_bound_verdict") {
  const QDomain qd(0.1, 1.0);
  const auto rejected = hadamard_bound_verdict(Family::Second, qd, all_ones(20));
  CHECK_FALSE(rejected.certified);
  CHECK(rejected.failure == VerdictFailure::CoefficientFilter);
  CHECK_FALSE(rejected.sup_bound.has_value());

  const auto accepted = hadamard_bound_verdict(Family::Second, qd, macgregor_series(0.5));
  CHECK(accepted.certified);
  CHECK(accepted.failure == VerdictFailure::None);
  REQUIRE(accepted.sup_bound.has_value());
  CHECK(*accepted.sup_bound == hadamard_sup_bound(Family::Second, qd));

  const QDomain weak(0.5, 0.1);
  const auto hyp = hadamard_bound_verdict(Family::Second, weak, macgregor_series(0.5));
  CHECK_FALSE(hyp.certified);
  CHECK(hyp.failure == VerdictFailure::Hypothesis);
  CHECK(hyp.hypothesis.id == ConditionId::CorIII);
  CHECK(hyp.hypothesis.lhs_value < 0.0);
  CHECK(hyp.hypothesis.lhs_value == Approx(4.0 * 0.5 * (1.0 - std::pow(0.5, 0.1)) - 3.0 * std::pow(0.5, 0.1)).epsilon(1e-14));
}

TEST_CASE("|h * f| on the unit circle stays under the sup bound") {
  brute::Sampler rng(309);
  const int m = 4096;
  int cases = 0;
  while (cases < 20) {
    const QDomain qd(rng.uniform(0.01, 0.5), rng.uniform(0.1, 3.0));
    for (const Family kind : {Family::Second, Family::Third}) {
      if (!hadamard_bound_hypothesis(kind, qd).holds) continue;
      const double bound = hadamard_sup_bound(kind, qd);
      for (const double t : {1.0, -1.0, 0.999, -0.9, 0.5}) {
        const auto u = hadamard(series_h(kind, qd), macgregor_series(t, 60));
        REQUIRE(std::isfinite(u.tail_bound()));
        double sup = 0.0;
        for (int k = 0; k < m; ++k) {
          sup = std::max(sup, std::abs(eval_series(u, std::polar(1.0, 2.0 * std::numbers::pi * k / m))));
        }
        CHECK(sup <= bound + u.tail_bound() + 1e-14);
      }
      ++cases;
    }
  }
}

TEST_CASE("sum |b_n|^2 stabilizes within the stored truncation") {
  brute::Sampler rng(311);
  for (int i = 0; i < 100; ++i) {
    const QDomain qd(rng.uniform(0.01, 0.9), rng.uniform(0.05, 3.0));
    for (const Family kind : {Family::Second, Family::Third}) {
      if (!positivity_condition(kind, qd).holds) continue;
      const auto h = series_h(kind, qd);
      double full = 0.0;
      for (std::size_t n = 1; n <= h.order(); ++n) full += std::norm(h.coeff(n));
      const double last_step = std::norm(h.coeff(h.order()));
      const double rest = h.tail_bound() * h.tail_bound();
      CHECK(last_step + rest <= 1e-14 * full);
    }
  }
}

TEST_CASE("hadamard_order_verdict") {
  const QDomain qd(0.1, 1.0);
  const auto half = hadamard_order_verdict(Family::Second, qd, 0.5, 0.5);
  CHECK(half.certified);
  CHECK(half.gamma == 0.5);
  CHECK_FALSE(half.failed_condition.has_value());

  const auto zero = hadamard_order_verdict(Family::Second, qd, 0.0, 0.0);
  CHECK(zero.certified);
  CHECK(zero.gamma == -1.0);

  const auto third = hadamard_order_verdict(Family::Third, QDomain(0.5, 1.0), 0.1, 0.0);
  CHECK_FALSE(third.certified);
  REQUIRE(third.failed_condition.has_value());
  CHECK(*third.failed_condition == ConditionId::Positivity3);

  const auto above = hadamard_order_verdict(Family::Second, qd, 0.97, 0.0);
  CHECK_FALSE(above.certified);
  CHECK(*above.failed_condition == ConditionId::P0Bound2);

  CHECK_THROWS_AS((void)hadamard_order_verdict(Family::Second, qd, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS((void)hadamard_order_verdict(Family::Second, qd, 0.5, 1.0), DomainError);
}
