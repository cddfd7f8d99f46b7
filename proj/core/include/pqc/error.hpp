#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pqc {

// Invalid arguments: mismatched sizes, malformed partitions, non-Hermitian
// input where a Hermitian one is required, and so on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// A configured resource cap would be exceeded (factorial table size, dense
// dimension, ancilla register size). Desk-scale limitation, not a bug.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResourceCaps {
  std::size_t factorial = 40320;       // largest n! handled densely (n = 8)
  std::size_t dense = 16384;           // largest d^n handled densely (2^14)
  std::size_t amplitudes = 1u << 22;  // total amplitudes held by basis sets and ancilla registers
};

inline const ResourceCaps& default_caps() {
  static const ResourceCaps caps;
  return caps;
}

}  // namespace pqc
