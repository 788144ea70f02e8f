#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylow {

/// Raised when an enumeration, search or orbit would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the cycle-notation and group-spec parsers. `position` is a 0-based
/// offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a factorization needs a prime factor beyond the configured bound.
class FactorizationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sylow
