#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "format.hpp"
#include "report.hpp"

namespace jqb::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Family> kFamilies{{"second", Family::Second}, {"third", Family::Third}};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

Range parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  std::size_t used_lo = 0;
  std::size_t used_hi = 0;
  Range r;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    const std::string lo = text.substr(0, colon);
    const std::string hi = text.substr(colon + 1);
    r.lo = std::stod(lo, &used_lo);
    r.hi = std::stod(hi, &used_hi);
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument("trailing text");
  } catch (const std::logic_error&) {
    throw DomainError(std::string(what) + " range must look like lo:hi (got " + text + ")");
  }
  if (!(r.lo <= r.hi)) throw DomainError(std::string(what) + " range needs lo <= hi (got " + text + ")");
  return r;
}

struct Globals {
  bool json = false;
  double tol = Tolerance{}.term_cutoff;
  int max_terms = Tolerance{}.max_terms;

  [[nodiscard]] Tolerance tolerance() const {
    const Tolerance t{tol, max_terms};
    t.validate();
    return t;
  }
};

struct EvalArgs {
  Family kind = Family::Second;
  double q = 0.0;
  double nu = 0.0;
  double z = 0.0;
  double z_imag = 0.0;
  std::string which = "raw";
};

struct CheckArgs {
  Family kind = Family::Second;
  double q = 0.0;
  double nu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct ScanArgs {
  Family kind = Family::Second;
  std::string q = "0.05:0.95";
  std::string nu = "0.1:3";
  int steps = 20;
  double alpha = 0.0;
  int workers = 1;
  std::string output = "-";
};

struct VerifyArgs {
  std::uint64_t seed = 42;
  int samples = 200;
  int workers = 1;
  int angular = DiskGrid{}.angular_count;
  int radial = DiskGrid{}.radial_count;
};

int cmd_eval(const Globals& g, const EvalArgs& a, std::ostream& out) {
  const Tolerance tol = g.tolerance();
  const QDomain qd(a.q, a.nu);
  const std::complex<double> z{a.z, a.z_imag};
  Certified<std::complex<double>> result{};
  if (a.which == "raw") {
    result = eval_jackson(a.kind, qd, z, tol);
  } else {
    const auto h = series_h(a.kind, qd, tol);
    result = {eval_series(h, z), h.tail_bound()};
  }
  if (g.json) {
    const json j{{"command", "eval"},       {"kind", to_string(a.kind)}, {"q", json12(a.q)},
                 {"nu", json12(a.nu)},      {"which", a.which},          {"z", json12(z)},
                 {"value", json12(result.value)}, {"error", json12(result.error)}};
    out << j.dump(2) << "\n";
  } else {
    out << "value " << fmt12(result.value) << "\n";
    out << "error " << fmt12(result.error) << "\n";
  }
  return kOk;
}

json threshold_json(Family kind, Property prop, const QDomain& qd) {
  if (!positivity_condition(kind, qd).holds) return nullptr;
  const auto t = alpha_threshold(kind, prop, qd);
  return {{"value", json12(t.value)}, {"direction_valid", t.direction_valid}, {"clipped", json12(t.clipped())}};
}

std::string threshold_text(Family kind, Property prop, const QDomain& qd) {
  if (!positivity_condition(kind, qd).holds) return "unclassified";
  const auto t = alpha_threshold(kind, prop, qd);
  std::string s = fmt12(t.value);
  s += t.direction_valid ? " (holds for alpha <= value)" : " (holds for alpha >= value)";
  if (t.exceeds_unit()) s += " (clipped to 1)";
  return s;
}

int cmd_check(const Globals& g, const CheckArgs& a, std::ostream& out) {
  (void)g.tolerance();
  const QDomain qd(a.q, a.nu);
  if (!(a.alpha >= 0.0 && a.alpha < 1.0)) throw DomainError("alpha must lie in [0,1)");
  if (!(a.beta < 1.0)) throw DomainError("beta must be < 1");

  const auto conditions = all_conditions(qd, a.alpha);
  const bool positive = positivity_condition(a.kind, qd).holds;
  const auto hardy = hardy_classify(a.kind, qd, a.alpha);
  const auto hypothesis = hadamard_bound_hypothesis(a.kind, qd);
  const double sup = hypothesis.holds ? hadamard_sup_bound(a.kind, qd) : 0.0;
  const auto order = hadamard_order_verdict(a.kind, qd, a.alpha, a.beta);
  const double p0 = positive ? p0_alpha_bound(a.kind, qd).value : 0.0;

  if (g.json) {
    json rows = json::array();
    for (std::size_t i = 0; i < conditions.size(); ++i) rows.push_back(to_json(kAllConditions[i], conditions[i]));
    json j{{"command", "check"},
           {"kind", to_string(a.kind)},
           {"q", json12(a.q)},
           {"nu", json12(a.nu)},
           {"alpha", json12(a.alpha)},
           {"beta", json12(a.beta)},
           {"conditions", rows}};
    j["thresholds"] = {{"starlike", threshold_json(a.kind, Property::Starlike, qd)},
                       {"convex", threshold_json(a.kind, Property::Convex, qd)},
                       {"p0_bound", positive ? json12(p0) : json(nullptr)}};
    j["hardy"] = {{"kind", to_string(hardy.kind)},
                  {"exponent", hardy.exponent ? json12(*hardy.exponent) : json(nullptr)},
                  {"basis", to_string(hardy.basis)}};
    j["hadamard_bound"] = {{"hypothesis", to_json(hypothesis.id, hypothesis)},
                           {"certified", hypothesis.holds},
                           {"sup_bound", hypothesis.holds ? json12(sup) : json(nullptr)},
                           {"assumes", "f in R"}};
    j["hadamard_order"] = {
        {"certified", order.certified},
        {"gamma", json12(order.gamma)},
        {"failed_condition",
         order.failed_condition ? json(std::string(to_string(*order.failed_condition))) : json(nullptr)},
        {"assumes", "f in R0(beta)"}};
    out << j.dump(2) << "\n";
    return kOk;
  }

  char line[160];
  out << "kind " << to_string(a.kind) << "  q " << fmt12(a.q) << "  nu " << fmt12(a.nu) << "  alpha "
      << fmt12(a.alpha) << "  beta " << fmt12(a.beta) << "\n\n";
  std::snprintf(line, sizeof line, "%-15s %-20s %-3s %-20s %s\n", "condition", "lhs", "rel", "rhs", "status");
  out << line;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const auto& r = conditions[i];
    const std::string id(to_string(kAllConditions[i]));
    if (r) {
      std::snprintf(line, sizeof line, "%-15s %-20s %-3s %-20s %s\n", id.c_str(), fmt12(r->lhs_value).c_str(),
                    std::string(to_string(r->relation)).c_str(), fmt12(r->rhs_value).c_str(),
                    r->holds ? "holds" : "fails");
    } else {
      std::snprintf(line, sizeof line, "%-15s %-20s %-3s %-20s %s\n", id.c_str(), "-", "-", "-", "unclassified");
    }
    out << line;
  }
  out << "\n";
  out << "alpha_star_starlike " << threshold_text(a.kind, Property::Starlike, qd) << "\n";
  out << "alpha_star_convex   " << threshold_text(a.kind, Property::Convex, qd) << "\n";
  out << "p0_bound            " << (positive ? fmt12(p0) : "unclassified") << "\n";
  out << "hardy               " << to_string(hardy.kind);
  if (hardy.exponent) out << " p=" << fmt12(*hardy.exponent);
  out << " (" << to_string(hardy.basis) << ")\n";
  out << "hadamard_bound      ";
  if (hypothesis.holds) {
    out << "certified under f in R, sup|h*f| <= " << fmt12(sup) << "\n";
  } else {
    out << "not certified (" << to_string(hypothesis.id) << " fails)\n";
  }
  out << "hadamard_order      ";
  if (order.certified) {
    out << "certified under f in R0(beta), gamma = " << fmt12(order.gamma) << "\n";
  } else {
    out << "not certified (" << to_string(*order.failed_condition) << " fails), gamma = " << fmt12(order.gamma)
        << "\n";
  }
  return kOk;
}

int cmd_scan(const Globals& g, const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const Range q = parse_range(a.q, "q");
  const Range nu = parse_range(a.nu, "nu");
  const ScanRequest req{a.kind, q.lo, q.hi, nu.lo, nu.hi, a.steps, a.alpha, g.tolerance()};
  const std::string csv = scan_csv(req, a.workers);

  if (a.output == "-") {
    out << csv;
    return kOk;
  }
  std::ofstream file(a.output, std::ios::binary | std::ios::trunc);
  if (file) file << csv;
  if (!file || !file.flush()) {
    err << "error: cannot write " << a.output << "\n";
    return kIoError;
  }
  if (g.json) {
    const json j{{"command", "scan"},
                 {"kind", to_string(a.kind)},
                 {"rows", a.steps * a.steps},
                 {"output", a.output}};
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << a.steps * a.steps << " rows to " << a.output << "\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  VerifyRequest req;
  req.seed = a.seed;
  req.samples = a.samples;
  req.grid.angular_count = a.angular;
  req.grid.radial_count = a.radial;
  req.tol = g.tolerance();
  const auto report = run_verify(req, a.workers);

  if (g.json) {
    json families = json::array();
    for (const auto& f : report.families) {
      families.push_back(
          {{"name", f.name}, {"checked", f.checked}, {"violations", f.violations}, {"passed", f.violations == 0}});
    }
    const json j{{"command", "verify"},
                 {"seed", a.seed},
                 {"samples", a.samples},
                 {"families", families},
                 {"passed", report.passed()}};
    out << j.dump(2) << "\n";
  } else {
    char line[128];
    for (const auto& f : report.families) {
      std::snprintf(line, sizeof line, "%-24s %6d checked %4d violations  %s\n", f.name.c_str(), f.checked,
                    f.violations, f.violations == 0 ? "PASS" : "FAIL");
      out << line;
    }
    out << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? kOk : kVerifyFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jackson q-Bessel geometric-property toolkit", "jqb"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file overriding defaults; flags win");

  Globals g;
  app.add_flag("--json", g.json, "Emit one JSON object instead of text");
  app.add_option("--tol", g.tol, "Series term cutoff")->capture_default_str();
  app.add_option("--max-terms", g.max_terms, "Series term budget")->capture_default_str();

  const auto kind_option = [](CLI::App* sub, Family& kind) {
    sub->add_option("--kind", kind, "second | third")
        ->required()
        ->transform(CLI::CheckedTransformer(kFamilies, CLI::ignore_case));
  };

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate J(z;q) (raw) or h(z;q) (normalized)");
  kind_option(eval, ea.kind);
  eval->add_option("--q", ea.q, "q in (0,1)")->required();
  eval->add_option("--nu", ea.nu, "nu > -1")->required();
  eval->add_option("--z", ea.z, "Real part of z")->capture_default_str();
  eval->add_option("--z-imag", ea.z_imag, "Imaginary part of z")->capture_default_str();
  eval->add_option("--which", ea.which, "raw | normalized")
      ->check(CLI::IsMember({"raw", "normalized"}))
      ->capture_default_str();

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Evaluate every certificate at one parameter point");
  kind_option(check, ca.kind);
  check->add_option("--q", ca.q, "q in (0,1)")->required();
  check->add_option("--nu", ca.nu, "nu > -1")->required();
  check->add_option("--alpha", ca.alpha, "Order in [0,1)")->capture_default_str();
  check->add_option("--beta", ca.beta, "Order of f for the Hadamard product, < 1")->capture_default_str();

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "Tabulate certificates over a (q, nu) grid as CSV");
  kind_option(scan, sa.kind);
  scan->add_option("--q", sa.q, "q range lo:hi (inclusive)")->capture_default_str();
  scan->add_option("--nu", sa.nu, "nu range lo:hi (inclusive)")->capture_default_str();
  scan->add_option("--steps", sa.steps, "Nodes per axis, >= 2")->capture_default_str();
  scan->add_option("--alpha", sa.alpha, "Order for the hardy_basis column")->capture_default_str();
  scan->add_option("--workers", sa.workers, "Worker threads")->capture_default_str();
  scan->add_option("--output,-o", sa.output, "Output path, - for stdout")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the randomized invariant suite");
  verify->add_option("--seed", va.seed, "Generator seed")->capture_default_str();
  verify->add_option("--samples", va.samples, "Parameter samples, >= 1")->capture_default_str();
  verify->add_option("--workers", va.workers, "Worker threads")->capture_default_str();
  verify->add_option("--grid-angular", va.angular, "Angles per sampling ring")->capture_default_str();
  verify->add_option("--grid-radial", va.radial, "Sampling rings")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (*eval) return cmd_eval(g, ea, out);
    if (*check) return cmd_check(g, ca, out);
    if (*scan) return cmd_scan(g, sa, out, err);
    return cmd_verify(g, va, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kNonConvergence;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"jqb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace jqb::cli
