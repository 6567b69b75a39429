#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tcl/errors.hpp"

namespace tcl {

using i128 = __int128;
using u128 = unsigned __int128;

inline constexpr i128 i128_max = static_cast<i128>(~u128(0) >> 1);
inline constexpr i128 i128_min = -i128_max - 1;

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "128-bit addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw error(errc::overflow, "128-bit subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "128-bit multiplication overflow");
  return r;
}

inline std::optional<i128> try_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

i128 checked_pow(i128 base, unsigned exp);
std::optional<i128> try_pow(i128 base, unsigned exp);

// exact division; throws if b does not divide a
i128 exact_div(i128 a, i128 b);

inline i128 abs128(i128 a) { return a < 0 ? -a : a; }

// floor(sqrt(n)) for n >= 0
i128 isqrt(i128 n);
std::optional<i128> exact_sqrt(i128 n);
bool is_square(i128 n);

i128 gcd128(i128 a, i128 b);
// non-negative residue
inline i128 mod(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

std::string to_string(i128 v);
i128 parse_i128(std::string_view s);

// fits in int64
inline bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace tcl
