#pragma once

#include <stdexcept>
#include <string>

namespace ringwicket {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text. `offset` is the 0-based character position of the
// offending token, or npos when no position applies.
struct ParseError : Error {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off = npos)
      : Error(off == npos ? msg : msg + " (at offset " + std::to_string(off) + ")"),
        offset(off) {}
};

// Structurally valid input that violates a domain rule (index out of range,
// letter illegal for the group family, mismatched groups or ranks, ...).
struct DomainError : Error {
  using Error::Error;
};

// A computation that cannot decide (geometry precondition violated,
// degenerate data). Coset-table overflow is reported via status, not this.
struct InconclusiveError : Error {
  using Error::Error;
};

}  // namespace ringwicket
