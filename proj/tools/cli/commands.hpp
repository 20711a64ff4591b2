#pragma once

// The jqb command-line surface as a library, so tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "jqb/jqb.hpp"

namespace jqb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailure = 1,
  kValidation = 2,
  kNonConvergence = 3,
  kIoError = 4,
};

struct ScanRequest {
  Family kind = Family::Second;
  double q_lo = 0.05;
  double q_hi = 0.95;
  double nu_lo = 0.1;
  double nu_hi = 3.0;
  int steps = 20;
  double alpha = 0.0;  ///< order used for the hardy_basis column
  Tolerance tol{};
};

/// The fixed CSV header line, without the trailing newline.
[[nodiscard]] std::string scan_header();

/// Full CSV (header plus steps^2 rows, q outer, nu inner, LF endings).
/// Rows are computed on `workers` threads and emitted in grid order, so the
/// bytes do not depend on the worker count.
[[nodiscard]] std::string scan_csv(const ScanRequest& req, int workers = 1);

struct VerifyRequest {
  std::uint64_t seed = 42;
  int samples = 200;
  DiskGrid grid{};
  Tolerance tol{};
};

struct FamilyResult {
  std::string name;
  int checked = 0;
  int violations = 0;
};

struct VerifyReport {
  std::vector<FamilyResult> families;
  [[nodiscard]] bool passed() const noexcept;
};

/// Randomized invariant suite. Sample i draws from a generator seeded with
/// (seed, i), so results are identical for any worker count.
[[nodiscard]] VerifyReport run_verify(const VerifyRequest& req, int workers = 1);

/// Parses argv[1..] and runs one subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jqb::cli
