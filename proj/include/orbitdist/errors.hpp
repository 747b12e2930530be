#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbitdist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotIrreducibleError : Error {
  using Error::Error;
};

struct NotPrimitiveError : Error {
  using Error::Error;
};

struct DegreeMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

struct InvalidSubfieldError : Error {
  using Error::Error;
};

struct TowerMismatchError : Error {
  using Error::Error;
};

struct ZeroShiftError : Error {
  using Error::Error;
};

struct ZeroGeneratorError : Error {
  using Error::Error;
};

struct AmbientMismatchError : Error {
  using Error::Error;
};

struct NotFullLengthError : Error {
  using Error::Error;
};

struct AlphaInBaseFieldError : Error {
  using Error::Error;
};

struct UnknownCheckError : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

// carries the position (byte offset) of the offending token
struct SyntaxError : Error {
  size_t position;
  SyntaxError(const std::string& msg, size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// the sweep would exceed the enumeration budget; reports what it needed
struct BudgetExceededError : Error {
  uint64_t required_orbit_size;
  uint64_t budget;
  BudgetExceededError(uint64_t required, uint64_t limit)
      : Error("orbit size " + std::to_string(required) +
              " exceeds enumeration budget " + std::to_string(limit)),
        required_orbit_size(required),
        budget(limit) {}
};

struct OracleScaleExceededError : Error {
  using Error::Error;
};

}  // namespace orbitdist
