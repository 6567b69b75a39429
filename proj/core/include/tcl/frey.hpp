#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcl/curves.hpp"
#include "tcl/int128.hpp"

namespace tcl {

// A^3 + B^3 = q^alpha C^p, normalised so that AC is even and B = (-1)^(C+1) mod 4
struct FreySolution {
  i128 A = 0, B = 0, C = 0;
  i128 q = 0;
  int alpha = 1;
  int branch = 1;  // 0 iff C even
  std::optional<int> p;
  bool verified = false;  // identity checked with a concrete p
};

// Applies swap A<->B and the global sign change (A,B,C) -> (-A,-B,-C), the
// latter valid for odd p, until the normal form is reached. Without p the
// triple is only checked for q^alpha | A^3 + B^3.
FreySolution normalize_solution(i128 A, i128 B, i128 C, i128 q, int alpha, std::optional<int> p = std::nullopt);

CurveModel frey_curve(const FreySolution& s);

struct ConductorClass {
  int level = 0;  // 18, 36 or 72
  i128 q = 0;
  i128 R = 1;     // product of primes dividing C and not 6q
  bool R_known = true;
  i128 conductor() const { return checked_mul(checked_mul(level, q), R); }
};

ConductorClass frey_conductor(const FreySolution& s);

struct FreySearchBounds {
  int ab_max = 200;
  i128 q_max = 100;
  std::vector<int> exponents{5, 7};
};

// primitive solutions with 1 <= |A|,|B| <= ab_max, q <= q_max prime, p in exponents,
// returned normalised and sorted
std::vector<FreySolution> search_solutions(const FreySearchBounds& bounds, int jobs = 1);

}  // namespace tcl
