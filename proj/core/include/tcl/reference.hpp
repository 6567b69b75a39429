#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tcl/families.hpp"
#include "tcl/int128.hpp"
#include "tcl/sieve.hpp"

namespace tcl {

// closed forms for (c4, c6) of a family curve as published alongside the
// coefficient tables
std::pair<i128, i128> appendix_c_invariants(const Representation& rep, std::string_view which);

// pseudorandom parameter tuple satisfying the family's side conditions with a
// positive (not necessarily prime) value; resamples until every curve of the
// family fits in 128 bits
Representation random_family_representation(std::string_view family, std::mt19937_64& rng);

struct AppendixRowResult {
  std::string curve;  // "18q.1.a2"
  int samples = 0;
  int c4_mismatch = 0;
  int c6_mismatch = 0;
  int disc_mismatch = 0;  // stated discriminant column
  int identity_fail = 0;  // c4^3 - c6^2 != 1728 disc
  std::optional<Representation> first_mismatch;
  bool ok() const { return c4_mismatch + c6_mismatch + disc_mismatch + identity_fail == 0; }
};

std::vector<AppendixRowResult> verify_appendix(int samples, std::uint64_t seed);

struct ExclusionTableRow {
  int q;
  std::int64_t modulus;
  std::vector<std::int64_t> residues;
};

// published excluded exponent classes for alpha = 1
const std::vector<ExclusionTableRow>& reference_exclusion_table();

struct IntersectionClaim {
  int i, j;  // S_i cap S_j
  std::vector<int> members;
};

const std::vector<IntersectionClaim>& reference_intersections();

// q = residue mod modulus forces q outside S_0
struct CongruenceClaim {
  int residue;
  int modulus;
};

const std::vector<CongruenceClaim>& reference_congruences();

struct IntersectionCheck {
  IntersectionClaim claim;
  std::vector<i128> found;  // primes q <= bound in both sets
  bool ok() const;
};

// bounded search over all primes 5 <= q <= bound
std::vector<IntersectionCheck> verify_intersections(i128 bound, int jobs = 1);

struct CongruenceCheck {
  CongruenceClaim claim;
  long candidates = 0;      // primes q <= bound in the class
  std::vector<i128> in_S0;  // counterexamples
  bool ok() const { return in_S0.empty(); }
};

std::vector<CongruenceCheck> verify_congruences(i128 bound, int jobs = 1);

struct CookieCheck {
  int q = 0, ell0 = 0, delta = 0;
  std::int64_t ell = 0;
  double e_q = 0;  // exp(q)
  bool below_e_q() const { return static_cast<double>(ell) < e_q; }
};

// every prime 5 <= q <= q_max, l0 in {1,7,13,19}, delta in {0,1}
std::vector<CookieCheck> verify_cookie(int q_max);

struct TableCheck {
  ExclusionTableRow row;
  ExclusionReport report;
  bool matches = false;  // same residue set and no unencoded instance
};

std::vector<TableCheck> verify_exclusion_table(const SearchBounds& bounds = {});

}  // namespace tcl
