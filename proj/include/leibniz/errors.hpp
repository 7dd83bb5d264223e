#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct PoleError : Error {
  using Error::Error;
};

/// Operands live over different generator lists.
struct RingMismatch : Error {
  using Error::Error;
};

struct ZeroEntryError : Error {
  ZeroEntryError(int i, int j)
      : Error("zero gamma entry at (" + std::to_string(i) + "," + std::to_string(j) + ")"), i(i), j(j) {}
  int i;
  int j;
};

struct CocycleError : Error {
  using Error::Error;
};

struct PrefixCheckError : Error {
  using Error::Error;
};

struct DecompositionError : Error {
  using Error::Error;
};

}  // namespace leibniz
