#include "tcl/arith.hpp"

#include <numeric>
#include <random>

namespace tcl {

int jacobi_symbol(i128 k, i128 m) {
  if (m <= 0 || (m & 1) == 0)
    throw error(errc::invalid_argument, "jacobi symbol needs odd positive modulus, got " + to_string(m));
  i128 a = mod(k, m);
  i128 n = m;
  int t = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      int r = static_cast<int>(n & 7);
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int valuation(i128 t, i128 ell) {
  if (t == 0) throw error(errc::invalid_argument, "valuation of zero");
  if (ell < 2) throw error(errc::invalid_argument, "valuation needs ell >= 2");
  int e = 0;
  while (t % ell == 0) {
    t /= ell;
    ++e;
  }
  return e;
}

SplitValuation valuation_split(i128 t, i128 ell) {
  if (t == 0) throw error(errc::invalid_argument, "valuation of zero");
  if (ell < 2) throw error(errc::invalid_argument, "valuation needs ell >= 2");
  SplitValuation s;
  while (t % ell == 0) {
    t /= ell;
    ++s.exponent;
  }
  s.unit = t;
  return s;
}

namespace {

u128 mulmod(u128 a, u128 b, u128 m) {
  if (m <= UINT64_MAX) return (a % m) * (b % m) % m;
  a %= m;
  b %= m;
  u128 r = 0;
  while (b) {
    if (b & 1) {
      r = (r >= m - a) ? r - (m - a) : r + a;
    }
    b >>= 1;
    a = (a >= m - a) ? a - (m - a) : a + a;
  }
  return r;
}

u128 powmod(u128 b, u128 e, u128 m) {
  u128 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool mr_round(u128 n, u128 d, int s, u128 a) {
  a %= n;
  if (a == 0) return true;
  u128 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Primality primality(i128 n) {
  Primality p;
  if (n < 2) return p;
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int sp : small) {
    if (n == sp) {
      p.prime = true;
      return p;
    }
    if (n % sp == 0) return p;
  }
  u128 un = static_cast<u128>(n);
  u128 d = un - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int a : small)
    if (!mr_round(un, d, s, static_cast<u128>(a))) return p;
  if (un <= UINT64_MAX) {
    p.prime = true;
    return p;
  }
  std::mt19937_64 rng(0x7463'6c5f'6d72ULL);
  for (int i = 0; i < 24; ++i) {
    u128 a = (static_cast<u128>(rng()) << 64 | rng()) % (un - 3) + 2;
    if (!mr_round(un, d, s, a)) return p;
  }
  p.prime = true;
  p.probable = true;
  return p;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

Factorization factor(i128 n, std::uint64_t bound) {
  if (n == 0) throw error(errc::invalid_argument, "cannot factor zero");
  Factorization f;
  if (n < 0) {
    f.sign = -1;
    n = -n;
  }
  auto take = [&](i128 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) f.factors.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (i128 p = 5; static_cast<std::uint64_t>(p) <= bound && p * p <= n; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) {
    if (static_cast<u128>(n) <= static_cast<u128>(bound) * bound || is_prime(n))
      f.factors.emplace_back(n, 1);
    else
      f.cofactor = n;
  }
  return f;
}

i128 squarefree_part(i128 k) {
  if (k == 0) throw error(errc::invalid_argument, "squarefree part of zero");
  Factorization f = factor(k);
  if (!f.complete()) throw error(errc::invalid_argument, "cannot factor " + to_string(k));
  i128 r = f.sign;
  for (auto& [p, e] : f.factors)
    if (e & 1) r *= p;
  return r;
}

std::vector<i128> odd_prime_divisors(i128 k) {
  std::vector<i128> out;
  Factorization f = factor(k);
  if (!f.complete()) throw error(errc::invalid_argument, "cannot factor " + to_string(k));
  for (auto& [p, e] : f.factors)
    if (p != 2) out.push_back(p);
  return out;
}

std::int64_t euler_phi(std::int64_t m) {
  if (m <= 0) throw error(errc::invalid_argument, "phi needs a positive modulus");
  std::int64_t r = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

int character_at(i128 kappa, std::int64_t r) {
  if (kappa == 0) throw error(errc::invalid_argument, "character of zero");
  if ((r & 1) == 0) throw error(errc::invalid_argument, "residue must be odd");
  Factorization f = factor(kappa);
  if (!f.complete()) throw error(errc::invalid_argument, "cannot factor " + to_string(kappa));
  std::int64_t r8 = ((r % 8) + 8) % 8;
  int chi = 1;
  if (f.sign < 0 && (r8 == 3 || r8 == 7)) chi = -chi;
  for (auto& [p, e] : f.factors) {
    if ((e & 1) == 0) continue;
    if (p == 2) {
      if (r8 == 3 || r8 == 5) chi = -chi;
      continue;
    }
    // (p/ell) = (ell/p) * (-1)^{(p-1)/2 (ell-1)/2}
    int leg = jacobi_symbol(r, p);
    if (leg == 0) throw error(errc::invalid_argument, "residue shares a factor with kappa");
    if ((p & 3) == 3 && (r8 & 3) == 3) leg = -leg;
    chi *= leg;
  }
  return chi;
}

std::map<std::int64_t, int> character_profile(i128 kappa, std::int64_t M) {
  if (M <= 0 || M % 8 != 0) throw error(errc::invalid_argument, "character_profile needs 8 | M");
  for (i128 p : odd_prime_divisors(kappa))
    if (M % p != 0)
      throw error(errc::invalid_argument, "odd prime " + to_string(p) + " of kappa does not divide M");
  std::map<std::int64_t, int> out;
  for (std::int64_t r = 1; r < M; ++r)
    if (std::gcd(r, M) == 1) out.emplace(r, character_at(kappa, r));
  return out;
}

}  // namespace tcl
