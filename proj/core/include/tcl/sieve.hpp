#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcl/curves.hpp"
#include "tcl/families.hpp"
#include "tcl/residue_set.hpp"

namespace tcl {

// alpha is either a concrete positive integer or symbolic with an assumed
// character value chi(alpha) = anchor
struct Alpha {
  std::optional<int> value;
  int anchor = 1;

  static Alpha of(int v) { return {v, 1}; }
  static Alpha symbolic(int anchor) { return {std::nullopt, anchor}; }
  bool is_symbolic() const { return !value.has_value(); }
  std::string to_string() const;
};

struct ChainTerm {
  i128 kappa = 1;  // squarefree
  bool times_alpha = false;
  std::string place;  // "q", "2" or "3"
};

// the characters of all terms must agree at p
struct RuleBranch {
  std::string condition;  // "any", "B = 1 mod 8", "B = 5 mod 8"
  std::vector<ChainTerm> chain;
};

struct TraceBound {
  std::int64_t ell = 0;
  i128 a_ell = 0;
  std::vector<i128> exceptional_primes;  // the only p not excluded
  i128 p_bound = 0;                       // max of exceptional_primes
};

struct ConstraintRule {
  std::string instance;  // "18q.1.a" or a Cremona class
  std::optional<Representation> rep;
  std::string model;  // curve the rule was read from
  bool wonder = false;
  std::vector<RuleBranch> branches;
  std::optional<std::string> structural;  // kill reason, applies to every p
  std::optional<TraceBound> trace;
  std::optional<std::string> unencoded;

  bool encoded() const { return !unencoded.has_value(); }
  std::string describe() const;
};

// smallest l = 1 mod 6 of good reduction with a_l != l + 1 mod 4, l <= ell_max
std::optional<TraceBound> trace_obstruction_bound(const CurveModel& m, std::int64_t ell_max = 1000);

// one rule per curve instance of the record. With strict set, an instance
// whose valuation data matches no encoded recipe raises unencoded_case;
// otherwise the rule carries the reason and is never used to kill.
std::vector<ConstraintRule> constraint_rules(const ClassificationRecord& rec, const Alpha& alpha,
                                             bool strict = true);

// rule read off the embedded models of a wonder fixed class (e.g. "306c"),
// bypassing the built-in q = 5 rules
ConstraintRule derived_fixed_class_rule(std::string_view class_label, i128 q);

struct ResidueAudit {
  std::int64_t residue = 0;
  bool excluded = false;
  std::vector<std::string> notes;  // one per instance: how it was killed, or which branch survives
};

struct ExclusionReport {
  i128 q = 0;
  Alpha alpha;
  std::int64_t modulus = 8;
  ResidueClassSet excluded;
  ResidueClassSet provisional_excluded;  // ignoring unencoded instances
  std::int64_t units = 0;
  double density = 0;
  bool incomplete = false;
  std::vector<ConstraintRule> rules;
  std::vector<ResidueAudit> audit;
  std::vector<std::string> caveats;
};

ExclusionReport excluded_exponents(i128 q, const Alpha& alpha, const SearchBounds& bounds = {});
ExclusionReport excluded_exponents(const ClassificationRecord& rec, const Alpha& alpha);

// smallest prime l != q with l = l0 mod 24 and (q/l) = (-1)^delta
std::int64_t smallest_cookie_prime(i128 q, int ell0, int delta, std::int64_t cap = 10000000);

}  // namespace tcl
