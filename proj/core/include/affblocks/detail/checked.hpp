#pragma once

#include "affblocks/error.hpp"

#include <cstdint>

namespace affblocks::detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw DomainError("exponent overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("exponent overflow");
  return out;
}

inline std::int64_t checked_neg(std::int64_t x) { return checked_mul(x, -1); }

}  // namespace affblocks::detail
