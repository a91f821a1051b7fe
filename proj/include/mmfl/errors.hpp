#pragma once

#include <stdexcept>
#include <string>

namespace mmfl {

// Error taxonomy shared by all modules. The C API maps each type to a
// status code, so new categories must be added in both places.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument to a single operation (index out of range, bad size).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Inconsistent experiment or module configuration (K not divisible by M,
// weights not summing to one, model larger than the padding window, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Effective beamforming gain fell below the numerical floor; receiver
// post-processing would be ill-defined.
class OutageError : public Error {
 public:
  using Error::Error;
};

// Numerical rank loss or a computation that cannot be completed stably.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Operation requested on a task it is not defined for.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmfl
