#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pzeta {

// Base class for everything this library throws.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid operands: non-prime modulus, mixed primes, valuation of zero, ...
struct domain_error : error {
  using error::error;
};

// An operation needed more digits than its operands carry.
struct precision_error : error {
  using error::error;
};

// Malformed literal. `position` is the byte offset of the offending character.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// A convergence or validity hypothesis fails for the given inputs
// (pole at s = 1, |lambda|_p <= M, guard failure, ...).
struct hypothesis_error : error {
  using error::error;
};

// Independently computed routes differ within their certified digits.
// This is the correctness tripwire; it must never be caught and ignored.
struct route_disagreement : error {
  using error::error;
};

}  // namespace pzeta
