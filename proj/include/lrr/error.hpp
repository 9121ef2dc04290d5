#pragma once

#include <stdexcept>
#include <string>

namespace lrr {

// Bad caller input: dimension mismatch, out-of-range parameter, malformed file.
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed (SVD did not converge, factorization broke down).
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input is structurally valid but degenerate for the operation (e.g. a zero matrix).
class DegenerateInputError : public ArgumentError {
public:
  using ArgumentError::ArgumentError;
};

// X does not lie in the column space of the dictionary.
class FeasibilityError : public std::runtime_error {
public:
  FeasibilityError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

}  // namespace lrr
