#pragma once

#include <stdexcept>
#include <string>

namespace modlift {

// Input outside the mathematical domain of an operation (zero inverse,
// non-prime modulus, out-of-range block index, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A resource cap (group closure size, unknown count) would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace modlift
