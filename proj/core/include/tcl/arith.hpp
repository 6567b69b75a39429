#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tcl/int128.hpp"

namespace tcl {

// Jacobi symbol (k/m) for odd m > 0
int jacobi_symbol(i128 k, i128 m);

// exponent of ell in t, t != 0
int valuation(i128 t, i128 ell);

struct SplitValuation {
  int exponent = 0;
  i128 unit = 0;
};

// t = ell^exponent * unit with ell not dividing unit
SplitValuation valuation_split(i128 t, i128 ell);

struct Primality {
  bool prime = false;
  bool probable = false;  // true when the answer is not proven (n >= 2^64)
};

Primality primality(i128 n);
inline bool is_prime(i128 n) { return primality(n).prime; }

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

struct Factorization {
  int sign = 1;
  std::vector<std::pair<i128, int>> factors;
  i128 cofactor = 1;  // unfactored part (> 1 if the trial bound was hit)
  bool complete() const { return cofactor == 1; }
};

// trial division up to `bound`, then a primality check on the cofactor
Factorization factor(i128 n, std::uint64_t bound = 1000000);

// signed squarefree kernel: k = squarefree_part(k) * s^2
i128 squarefree_part(i128 k);

// odd primes dividing k
std::vector<i128> odd_prime_divisors(i128 k);

std::int64_t euler_phi(std::int64_t m);

// residue r in (Z/M)^* -> (kappa / p) for any prime p = r mod M.
// Requires 8 | M and every odd prime of kappa dividing M.
std::map<std::int64_t, int> character_profile(i128 kappa, std::int64_t M);

// (kappa/p) for the prime class r mod M, same preconditions, no table
int character_at(i128 kappa, std::int64_t r);

}  // namespace tcl
