#pragma once

#include <stdexcept>
#include <string>

namespace spherepde {

/// Argument outside the mathematical domain of an operation (|t| > 1, r >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a genuine singularity of a kernel.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Result would overflow double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Case not covered by a shipped table or algorithm (e.g. closed form for n = 11).
class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands built for different spheres or incompatible truncations.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid too coarse for the requested bandlimit.
class ResolutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Partial sums failed the divergence check.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical procedure (quadrature, iteration) did not meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The equation has no solution for this right-hand side; `degree()` names
/// the offending harmonic degree.
class SolvabilityError : public std::runtime_error {
 public:
  SolvabilityError(const std::string& what, int degree)
      : std::runtime_error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// Helmholtz parameter sits on (or too close to) an eigenvalue l(l+n-1).
class ResonanceError : public SolvabilityError {
 public:
  using SolvabilityError::SolvabilityError;
};

}  // namespace spherepde
