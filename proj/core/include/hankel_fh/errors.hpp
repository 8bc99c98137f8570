#pragma once

#include <stdexcept>
#include <string>

namespace hankel_fh {

/// Broad classes of failure. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kDomain,              ///< argument outside the domain of an operation
  kResolution,          ///< Chebyshev fit failed to resolve at tolerance
  kRegularity,          ///< potential is not one-cut regular on [-1,1]
  kHypothesis,          ///< singularity parameters violate the asymptotic regime
  kInconsistency,       ///< internally inconsistent input (e.g. not an equilibrium)
  kConvergence,         ///< numerical refinement did not converge
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::kDomain, what) {}
};

class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& what)
      : Error(ErrorKind::kResolution, what) {}
};

class RegularityViolation : public Error {
 public:
  RegularityViolation(int condition, const std::string& what)
      : Error(ErrorKind::kRegularity, what), condition_(condition) {}

  /// Which one-cut-regularity condition failed (3: strict exterior
  /// inequality, 4: positivity of the density factor).
  int condition() const noexcept { return condition_; }

 private:
  int condition_;
};

class HypothesisViolation : public Error {
 public:
  explicit HypothesisViolation(const std::string& what)
      : Error(ErrorKind::kHypothesis, what) {}
};

class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what)
      : Error(ErrorKind::kInconsistency, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::kConvergence, what) {}
};

}  // namespace hankel_fh
