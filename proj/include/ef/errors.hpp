#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ef {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed argument (degree mismatch, point out of range, not a subgroup, ...).
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// A computation refused because it would exceed a configured limit.
struct TooLarge : Error {
  explicit TooLarge(const std::string& msg) : Error(msg) {}
};

// Asked for a quantity that only exists for soluble groups.
struct NotSoluble : Error {
  explicit NotSoluble(const std::string& msg) : Error(msg) {}
};

// Cycle-notation / group-file syntax error.  `position` is a 0-based byte
// offset into the offending string.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace ef
