#pragma once

#include <stdexcept>
#include <string>

namespace sompkit {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Shapes do not match, or an operand is empty.
class dimension_error : public error {
 public:
  using error::error;
};

/// An argument is outside the mathematical domain of the operation.
class domain_error : public error {
 public:
  using error::error;
};

/// A matrix that must have full column rank does not.
class singularity_error : public error {
 public:
  using error::error;
};

/// A column that must have unit norm does not.
class normalization_error : public error {
 public:
  using error::error;
};

/// A guarantee formula was evaluated outside its feasibility region
/// (typically mu >= 1/(2L-1), where the bound is vacuous).
class feasibility_error : public error {
 public:
  using error::error;
};

/// A documented precondition was violated by the caller.
class precondition_error : public error {
 public:
  using error::error;
};

/// Malformed configuration file or command line.
class config_error : public error {
 public:
  using error::error;
};

/// Filesystem failure while reading or writing artifacts.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace sompkit
