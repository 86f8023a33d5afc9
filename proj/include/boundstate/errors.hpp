#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace boundstate {

// Base class for all solver errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite input, non-positive mass or screening, bad dimension, ...
struct InvalidParamsError : Error {
  using Error::Error;
};

// Inverse-square attraction too strong: 8 M V1 + (D + 2l - 2)^2 < 0,
// no normalizable ground state exists.
struct FallToCenterError : Error {
  using Error::Error;
};

// Requested level fails the binding condition (decay exponent c_n <= 0).
struct NotBoundError : Error {
  using Error::Error;
};

// Iteration coefficients left the representable range.
struct ScaleError : Error {
  using Error::Error;
};

// Root search exhausted the iteration budget before the requested number
// of roots stabilized; carries whatever was found.
struct NoConvergenceError : Error {
  NoConvergenceError(const std::string& msg, std::vector<double> partial)
      : Error(msg), partial_roots(std::move(partial)) {}
  std::vector<double> partial_roots;
};

// Sampling grid cannot resolve the sign structure it was asked about.
struct GridTooCoarseError : Error {
  using Error::Error;
};

// Discrete spectrum is empty below the continuum threshold.
struct NoBoundStatesError : Error {
  using Error::Error;
};

}  // namespace boundstate
