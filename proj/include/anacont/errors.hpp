#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace anacont {

// Bad argument values (counts, tolerances, malformed config).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input point lies outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A branch selection is impossible or contradictory for the requested point.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Evaluation point is too close to a pole of the integrand.
class PoleProximityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// No admissible contour / parameter configuration exists for the request.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decay or validity certificate failed numerical verification.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pointwise function evaluation failed (singular point, overflow, cut).
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested accuracy could not be certified; carries the best value
// obtained and its estimated error so callers can decide what to do.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, std::complex<double> value,
                double err_estimate)
      : std::runtime_error(what), value(value), err_estimate(err_estimate) {}
  std::complex<double> value;
  double err_estimate;
};

// Expression-language parse failure; `position` is a 0-based byte offset
// into the source string.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

}  // namespace anacont
