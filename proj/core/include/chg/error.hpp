#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chg {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: dimension mismatch, element outside its group, empty set.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the documented range of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Valid but unsupported parameters (e.g. p = 2 where an odd prime is needed).
class UnsupportedError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An enumeration or node cap would be exceeded. Never accompanies a verdict.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A self-check inside the library failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

struct AttemptStats {
  std::uint64_t seed = 0;
  std::size_t sample_size = 0;
  std::size_t bad_size = 0;
};

// Every attempt of a randomized construction was rejected.
class ExhaustionError : public Error {
 public:
  ExhaustionError(const std::string& what, std::vector<AttemptStats> attempts);

  const std::vector<AttemptStats>& attempts() const noexcept {
    return attempts_;
  }

 private:
  std::vector<AttemptStats> attempts_;
};

}  // namespace chg
