#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "polygcd/integer.hpp"

namespace polygcd {

/// Malformed or out-of-contract input. The CLI maps this to exit status 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  /// Zero-based offset into the input text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotMonicError : public InputError {
 public:
  explicit NotMonicError(const Integer& leading)
      : InputError("polynomial is not monic: leading coefficient is " +
                   to_decimal(leading)),
        leading_(leading) {}

  const Integer& leading() const noexcept { return leading_; }

 private:
  Integer leading_;
};

/// A configured work limit (brute-force range, divisor count, residue
/// listing, factorization retries) was exceeded. CLI exit status 2.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug. CLI exit status 3.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace polygcd
