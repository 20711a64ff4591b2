#include <algorithm>
#include <array>
#include <exception>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "format.hpp"
#include "report.hpp"

namespace jqb::cli {

namespace {

std::string flag(const std::optional<ConditionReport>& r) {
  if (!r) return "";
  return r->holds ? "true" : "false";
}

std::string threshold(Family kind, Property prop, const QDomain& qd) {
  if (!positivity_condition(kind, qd).holds) return "";
  return fmt12(alpha_threshold(kind, prop, qd).value);
}

std::string row(const ScanRequest& req, double q, double nu) {
  const QDomain qd(q, nu);
  std::string line = fmt12(q) + "," + fmt12(nu);
  for (const auto& r : all_conditions(qd, req.alpha)) line += "," + flag(r);
  line += "," + threshold(req.kind, Property::Starlike, qd);
  line += "," + threshold(req.kind, Property::Convex, qd);
  line += ",";
  if (positivity_condition(req.kind, qd).holds) line += fmt12(p0_alpha_bound(req.kind, qd).value);
  line += ",";
  line += to_string(hardy_classify(req.kind, qd, req.alpha).basis);
  line += "\n";
  return line;
}

double node(double lo, double hi, int i, int steps) {
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

std::string scan_header() {
  std::string h = "q,nu";
  for (const ConditionId id : kAllConditions) h += "," + std::string(to_string(id));
  return h + ",alpha_star_starlike,alpha_star_convex,p0_bound,hardy_basis";
}

std::string scan_csv(const ScanRequest& req, int workers) {
  if (req.steps < 2) throw DomainError("steps must be >= 2");
  if (workers < 1) throw DomainError("workers must be >= 1");
  if (!(req.alpha >= 0.0 && req.alpha < 1.0)) throw DomainError("alpha must lie in [0,1)");
  req.tol.validate();
  // Validates the corners; every interior node then lies in the domain.
  for (const double q : {req.q_lo, req.q_hi}) {
    for (const double nu : {req.nu_lo, req.nu_hi}) (void)QDomain(q, nu);
  }

  const int n = req.steps * req.steps;
  std::vector<std::string> rows(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  const auto work = [&](int w) {
    try {
      for (int k = w; k < n; k += workers) {
        const double q = node(req.q_lo, req.q_hi, k / req.steps, req.steps);
        const double nu = node(req.nu_lo, req.nu_hi, k % req.steps, req.steps);
        rows[static_cast<std::size_t>(k)] = row(req, q, nu);
      }
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::string out = scan_header() + "\n";
  for (const auto& r : rows) out += r;
  return out;
}

}  // namespace jqb::cli
