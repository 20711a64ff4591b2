#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "commands.hpp"

namespace jqb::cli {

namespace {

enum Invariant : std::size_t {
  kMajorant,
  kChain,
  kConvexImpliesStarlike,
  kThresholdFlip,
  kImplication,
  kHadamardBound,
  kFamilyCount,
};

constexpr const char* kFamilyNames[kFamilyCount] = {
    "coefficient_majorant", "kappa_chain",   "convex_implies_starlike",
    "threshold_flip",       "implication",   "hadamard_bound",
};

struct Tally {
  std::array<int, kFamilyCount> checked{};
  std::array<int, kFamilyCount> violations{};

  void record(std::size_t family, bool ok) {
    ++checked[family];
    if (!ok) ++violations[family];
  }
};

class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    gen_.seed(seq);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

// a_n = (2/n) s^n, n|a_n| = 2: the extremal coefficient size for the filter.
CoefficientSeries macgregor_polynomial(double sign, std::size_t order) {
  std::vector<std::complex<double>> a(order);
  a[0] = 1.0;
  for (std::size_t n = 2; n <= order; ++n) a[n - 1] = 2.0 / static_cast<double>(n) * std::pow(sign, n);
  return CoefficientSeries(std::move(a));
}

void run_sample(const VerifyRequest& req, int index, Tally& t) {
  Draw d(req.seed, static_cast<std::uint64_t>(index));
  const Family kind = d.uniform(0.0, 1.0) < 0.5 ? Family::Second : Family::Third;
  // Redraw until the closed forms apply; the suite checks certified claims.
  std::optional<QDomain> drawn;
  for (int attempt = 0; attempt < 1000 && !drawn; ++attempt) {
    const QDomain qd(kind == Family::Second ? d.uniform(0.01, 0.95) : d.uniform(0.001, 0.2), d.uniform(0.05, 3.0));
    if (positivity_condition(kind, qd).holds) drawn = qd;
  }
  if (!drawn) return;
  const QDomain qd = *drawn;
  const double alpha = d.uniform(0.0, 0.99);
  const auto h = series_h(kind, qd, req.tol);

  const double rho = *majorant_ratio(kind, qd);
  bool majorized = true;
  for (int n = 2; n <= 40; ++n) majorized = majorized && std::abs(coeff_h(kind, n, qd)) <= std::pow(rho, n - 1);
  t.record(kMajorant, majorized);

  for (const Property prop : {Property::Starlike, Property::Convex}) {
    const auto bound = kappa_closed_bound(kind, prop, qd, alpha);
    t.record(kChain, kappa_direct(h, alpha, prop) <= bound.lhs_value + 1e-10);

    const auto th = alpha_threshold(kind, prop, qd);
    if (th.direction_valid && th.value > 0.0 && th.value * (1.0 + 1e-9) < 1.0) {
      t.record(kThresholdFlip, kappa_closed_bound(kind, prop, qd, th.value * (1.0 - 1e-9)).holds &&
                                   !kappa_closed_bound(kind, prop, qd, th.value * (1.0 + 1e-9)).holds);
    }
  }
  if (kappa_closed_bound(kind, Property::Convex, qd, alpha).holds) {
    t.record(kConvexImpliesStarlike, kappa_closed_bound(kind, Property::Starlike, qd, alpha).holds);
  }

  for (const auto prop : {CheckedProperty::Starlike, CheckedProperty::Convex, CheckedProperty::P0}) {
    const auto r = crosscheck_sufficient_vs_sampled(kind, qd, alpha, prop, req.grid, req.tol);
    if (r.certified) t.record(kImplication, r.implication_holds);
  }

  if (hadamard_bound_hypothesis(kind, qd).holds) {
    const double bound = hadamard_sup_bound(kind, qd);
    const int m = req.grid.angular_count;
    for (const double sign : {1.0, -1.0}) {
      const auto u = hadamard(h, macgregor_polynomial(sign, 40));
      double sup = 0.0;
      for (int k = 0; k < m; ++k) {
        sup = std::max(sup, std::abs(eval_series(u, std::polar(1.0, 2.0 * std::numbers::pi * k / m))));
      }
      t.record(kHadamardBound, sup <= bound + u.tail_bound() + 1e-12);
    }
  }
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  for (const auto& f : families) {
    if (f.violations != 0) return false;
  }
  return true;
}

VerifyReport run_verify(const VerifyRequest& req, int workers) {
  if (req.samples < 1) throw DomainError("samples must be >= 1");
  if (workers < 1) throw DomainError("workers must be >= 1");
  req.grid.validate();
  req.tol.validate();

  std::vector<Tally> tallies(static_cast<std::size_t>(req.samples));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  const auto work = [&](int w) {
    try {
      for (int i = w; i < req.samples; i += workers) run_sample(req, i, tallies[static_cast<std::size_t>(i)]);
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  VerifyReport report;
  for (std::size_t f = 0; f < kFamilyCount; ++f) {
    FamilyResult r{kFamilyNames[f], 0, 0};
    for (const auto& t : tallies) {
      r.checked += t.checked[f];
      r.violations += t.violations[f];
    }
    report.families.push_back(r);
  }
  return report;
}

}  // namespace jqb::cli
