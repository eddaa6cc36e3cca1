#pragma once

#include <stdexcept>
#include <string>

namespace rtspa {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input lies outside the admissible interval of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A transformation angle would drive adjacent units (or bases) into contact.
class ContactViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

// A servo would have to rotate past its +/-90 deg travel.
class MotorSaturation : public Error {
 public:
  MotorSaturation(std::string motor, double required_deg);

  const std::string& motor() const { return motor_; }
  double required_deg() const { return required_deg_; }

 private:
  std::string motor_;
  double required_deg_;
};

class FitFailure : public Error {
 public:
  using Error::Error;
};

// No candidate (wall thickness, grip mode, ...) satisfies the constraints.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnreachableTarget : public Error {
 public:
  using Error::Error;
};

// Missing, unparsable or semantically invalid configuration / data file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace rtspa
