#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "tcl/int128.hpp"

namespace tcl::detail {

using wide = boost::multiprecision::checked_int256_t;

inline wide widen(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  wide w = static_cast<std::uint64_t>(u >> 64);
  w <<= 64;
  w += static_cast<std::uint64_t>(u);
  return neg ? -w : w;
}

inline i128 narrow(const wide& w, const char* what) {
  static const wide hi = widen(i128_max);
  static const wide lo = widen(i128_min);
  if (w > hi || w < lo) throw error(errc::overflow, std::string(what) + " exceeds 128 bits");
  wide a = abs(w);
  u128 u = static_cast<u128>(static_cast<std::uint64_t>(a >> 64)) << 64 |
           static_cast<std::uint64_t>(a & wide(UINT64_MAX));
  return w < 0 ? -static_cast<i128>(u) : static_cast<i128>(u);
}

}  // namespace tcl::detail
