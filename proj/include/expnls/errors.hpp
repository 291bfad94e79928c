#pragma once

#include <stdexcept>
#include <string>

namespace expnls {

// Base class for every recoverable numerical-lab error.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A field contains NaN/Inf samples or mismatched dimensions.
class InvalidField : public Error {
  public:
    using Error::Error;
};

// An exponent would exceed the configured safety cap. Carries the offending
// modulus and, when known, the flat grid index where it occurred.
class OverflowRisk : public Error {
  public:
    OverflowRisk(const std::string& what, double modulus, long index = -1)
        : Error(what), modulus_(modulus), index_(index) {}
    double modulus() const { return modulus_; }
    long grid_index() const { return index_; }

  private:
    double modulus_;
    long index_;
};

class RadiusOutOfBox : public Error {
  public:
    using Error::Error;
};

class ResolutionTooCoarse : public Error {
  public:
    using Error::Error;
};

class QuadratureFailure : public Error {
  public:
    using Error::Error;
};

class ConfigInvalid : public Error {
  public:
    using Error::Error;
};

class ZeroField : public Error {
  public:
    using Error::Error;
};

class InvalidFunctional : public Error {
  public:
    using Error::Error;
};

}  // namespace expnls
