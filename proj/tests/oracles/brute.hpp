#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcl/families.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;

bool is_prime_naive(std::int64_t n);

// Legendre symbol by listing the squares mod p (p odd prime)
int legendre_by_squares(std::int64_t k, std::int64_t p);

// #E(F_p) - 1 by looping over all (x, y)
std::int64_t affine_points(const cpp_int& a1, const cpp_int& a2, const cpp_int& a3, const cpp_int& a4,
                           const cpp_int& a6, std::int64_t p);

struct BigInvariants {
  cpp_int c4, c6, disc;
};

BigInvariants invariants(const cpp_int& a1, const cpp_int& a2, const cpp_int& a3, const cpp_int& a4,
                         const cpp_int& a6);

struct EnumBounds {
  int a_max = 40;
  int b_max = 25;
  int d_max = 2000;
  int uv_max = 300;
  std::int64_t q_limit = 10000;
};

// every prime q < q_limit reached by a family formula over the parameter box,
// keyed by q; q^n families are not enumerated
std::map<std::int64_t, std::set<tcl::Representation>> enumerate_families(const EnumBounds& b);

}  // namespace oracle
