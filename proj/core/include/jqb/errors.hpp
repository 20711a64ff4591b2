#pragma once

#include <stdexcept>
#include <string>

namespace jqb {

/// An argument lies outside the mathematical domain of the operation
/// (q outside (0,1), nu <= -1, |z| > 1 for a disk series, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A series or product did not reach its truncation cutoff within the
/// configured number of terms.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// A closed-form bound was requested where its hypothesis fails, e.g. the
/// geometric majorant diverges because the positivity condition is false.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace jqb
