#include "tcl/int128.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace tcl {

const char* errc_name(errc e) {
  switch (e) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::overflow: return "overflow";
    case errc::singular_model: return "singular-model";
    case errc::bad_reduction: return "bad-reduction";
    case errc::not_a_solution: return "not-a-solution";
    case errc::no_normalization: return "no-normalization";
    case errc::normalization_bug: return "normalization-bug";
    case errc::not_found: return "not-found";
    case errc::bad_dataset: return "bad-dataset";
    case errc::unencoded_case: return "unencoded-case";
  }
  return "unknown";
}

i128 checked_pow(i128 base, unsigned exp) {
  i128 r = 1;
  while (exp) {
    if (exp & 1) r = checked_mul(r, base);
    exp >>= 1;
    if (exp) base = checked_mul(base, base);
  }
  return r;
}

std::optional<i128> try_pow(i128 base, unsigned exp) {
  try {
    return checked_pow(base, exp);
  } catch (const error&) {
    return std::nullopt;
  }
}

i128 exact_div(i128 a, i128 b) {
  if (b == 0 || a % b != 0)
    throw error(errc::invalid_argument, to_string(a) + " is not divisible by " + to_string(b));
  return a / b;
}

i128 isqrt(i128 n) {
  if (n < 0) throw error(errc::invalid_argument, "isqrt of negative value");
  if (n < 2) return n;
  i128 x = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  // fix up the floating estimate
  while (x > 0 && (x > n / x)) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

bool is_square(i128 n) {
  if (n < 0) return false;
  // quick residue filters
  static const auto tab64 = [] {
    std::array<bool, 64> t{};
    for (int i = 0; i < 64; ++i) t[(i * i) % 64] = true;
    return t;
  }();
  if (!tab64[static_cast<unsigned>(n & 63)]) return false;
  unsigned r63 = static_cast<unsigned>(n % 63);
  static const auto tab63 = [] {
    std::array<bool, 63> t{};
    for (int i = 0; i < 63; ++i) t[(i * i) % 63] = true;
    return t;
  }();
  if (!tab63[r63]) return false;
  i128 r = isqrt(n);
  return r * r == n;
}

std::optional<i128> exact_sqrt(i128 n) {
  if (!is_square(n)) return std::nullopt;
  return isqrt(n);
}

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

i128 parse_i128(std::string_view s) {
  if (s.empty()) throw error(errc::invalid_argument, "empty integer");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw error(errc::invalid_argument, "bad integer '" + std::string(s) + "'");
  // accept 1e7 style for convenience
  auto epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    i128 m = parse_i128(s.substr(i, epos - i));
    i128 e = parse_i128(s.substr(epos + 1));
    if (e < 0 || e > 38) throw error(errc::invalid_argument, "bad exponent in '" + std::string(s) + "'");
    i128 v = checked_mul(m, checked_pow(10, static_cast<unsigned>(e)));
    return neg ? -v : v;
  }
  // accumulate negatively so that the minimum value parses
  i128 v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw error(errc::invalid_argument, "bad integer '" + std::string(s) + "'");
    v = checked_sub(checked_mul(v, 10), c - '0');
  }
  return neg ? v : checked_mul(v, -1);
}

}  // namespace tcl
