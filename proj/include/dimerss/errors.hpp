#pragma once

#include <stdexcept>
#include <string>

namespace dimerss {

// Input and shape errors.
class DimensionMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class HermiticityViolation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class InvalidParameter : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failures. The CLI maps everything derived from NumericalError to exit code 2.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DegenerateSteadyState : public NumericalError {
  public:
    DegenerateSteadyState(const std::string& what, int nullity)
        : NumericalError(what), nullity_(nullity) {}
    int nullity() const noexcept { return nullity_; }

  private:
    int nullity_;
};

class NoConvergence : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class SingularDenominator : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class StepTooLarge : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class NeverEntangled : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

class NoCollapse : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

}  // namespace dimerss
