#pragma once

#include <stdexcept>
#include <string>

namespace ermakov {

// All library failures derive from Error. The split between DomainError and
// NumericalError mirrors the CLI exit codes (1 and 2 respectively).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// (profile, initial condition) pair without a catalogued closed form.
class NoClosedForm : public DomainError {
 public:
  using DomainError::DomainError;
};

class NegativeModeFrequency : public DomainError {
 public:
  using DomainError::DomainError;
};

class StepFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class ConvergenceFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootNotBracketed : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class Overflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace ermakov
