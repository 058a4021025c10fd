#pragma once

#include <stdexcept>
#include <string>

namespace fibersense {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad configuration, bad input files, inconsistent databases.
class config_error : public error {
 public:
  using error::error;
};

/// File I/O problems: missing files, truncation, checksum mismatch.
class io_error : public error {
 public:
  using error::error;
};

/// Numerical failures: divergence, singular denominators, non-finite values.
class numeric_error : public error {
 public:
  using error::error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

/// A quadrature or series refused to converge within its budget.
class accuracy_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

/// Total trap curvature went non-positive; names the offending sphere.
class instability_error : public numeric_error {
 public:
  using numeric_error::numeric_error;
};

}  // namespace fibersense
