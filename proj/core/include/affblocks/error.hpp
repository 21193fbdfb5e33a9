#pragma once

#include <stdexcept>
#include <string>

namespace affblocks {

/// Raised when an input violates a mathematical precondition
/// (non-dominant tuple, row out of range, n <= r, mismatched n, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised on malformed textual or JSON input.
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

}  // namespace affblocks
