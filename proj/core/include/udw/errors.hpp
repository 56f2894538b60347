#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace udw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit its subdivision limit before meeting the tolerance.
/// Carries the best estimate reached and the error it achieved.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best_estimate,
                   double achieved_error)
      : Error(what), best_estimate_(best_estimate), achieved_error_(achieved_error) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  std::complex<double> best_estimate_;
  double achieved_error_;
};

/// Semi-infinite integral requested without a usable decay bound.
class UnboundedDomainError : public Error {
 public:
  using Error::Error;
};

/// A root of a denominator with |h'| below the simplicity floor.
class DegenerateRootError : public Error {
 public:
  DegenerateRootError(const std::string& what, double location, double derivative)
      : Error(what), location_(location), derivative_(derivative) {}
  double location() const noexcept { return location_; }
  double derivative() const noexcept { return derivative_; }

 private:
  double location_;
  double derivative_;
};

/// Principal-value exclusion windows cannot be made disjoint and interior.
class WindowCollisionError : public Error {
 public:
  using Error::Error;
};

/// Extrapolation was given too few samples.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested outside the region where a function is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Trajectory speed reached or exceeded the speed of light.
class SuperluminalError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Excitation rate is not below the de-excitation rate; no positive temperature exists.
class PopulationInversionError : public Error {
 public:
  using Error::Error;
};

/// A response that must be positive came out non-positive or below its noise floor.
class NonpositiveResponseError : public Error {
 public:
  using Error::Error;
};

/// Two detectors share a worldline (or touch), so X is not finite.
class CoincidentDetectorError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

}  // namespace udw
