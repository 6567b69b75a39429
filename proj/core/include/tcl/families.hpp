#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcl/int128.hpp"

namespace tcl {

struct Representation {
  std::string family;               // "S4", "18q.4", "72q.12", ...
  std::map<std::string, i128> params;  // a, b, d, u, v, n, delta, delta1, delta2

  bool has(const std::string& key) const { return params.count(key) != 0; }
  i128 get(const std::string& key) const;
  int geti(const std::string& key) const { return static_cast<int>(get(key)); }
  std::string to_string() const;
  bool operator==(const Representation&) const = default;
  bool operator<(const Representation& o) const {
    return family != o.family ? family < o.family : params < o.params;
  }
};

struct SearchBounds {
  int a_max = 125;
  int b_max = 79;
  i128 d_max = 0;  // 0: no cap beyond the 128-bit range
  std::vector<int> n_values{7, 11, 13};
  std::string to_string() const;
};

// "S1".."S8" followed by the theorem families
const std::vector<std::string>& family_ids();
bool is_set_family(std::string_view id);
// conductor level (18, 36, 72) of a theorem family, 0 for S-sets
int family_level(std::string_view id);
// value q (or q^n) predicted by the parameters; checks side conditions
i128 family_value(const Representation& rep);
// empty string if all side conditions hold, else the violated clause
std::string side_condition_violation(const Representation& rep);

std::vector<Representation> search_family(i128 q, std::string_view family,
                                          const SearchBounds& bounds = {});

struct FixedClassInfo {
  std::string label;  // Cremona class, e.g. "90c"
  int conductor;
  int q;
  bool wonder;  // discriminant square class T^2 or -3T^2 in the class
  bool listed;  // named in the classification theorems (342b is not)
};

const std::vector<FixedClassInfo>& fixed_class_table();

struct CurveInstance {
  std::string label;  // "18q.5.b" or a Cremona class like "90c"
  std::optional<Representation> rep;
  int level = 0;
  bool wonder = false;
  std::vector<std::string> aliases;  // duplicate parameterisations folded into this one
  std::string cremona;               // embedded class this instance matched, if any
};

struct ClassificationRecord {
  i128 q = 0;
  std::vector<Representation> reps;
  bool in_S = false;
  bool in_S0 = false;
  bool in_T = false;
  std::vector<std::string> fixed_classes;
  std::vector<CurveInstance> curve_instances;
  std::vector<std::string> caveats;
  SearchBounds bounds;
};

ClassificationRecord classify_prime(i128 q, const SearchBounds& bounds = {});

// wonder/goose split of a theorem-family isogeny class for given parameters
bool family_instance_is_wonder(const Representation& rep);
// isogeny-class letters of a family ("a" or "a","b")
std::vector<std::string> family_classes(std::string_view family);

struct Membership {
  bool in_S = false;
  bool in_S0 = false;
  bool in_T = false;
};

// flags only; stops searching as soon as the answer is known
Membership membership(i128 q, const SearchBounds& bounds = {});
bool in_set(i128 q, std::string_view set_id, const SearchBounds& bounds = {});

struct PellTerm {
  int k = 0;
  i128 u = 0, v = 0;
  i128 q_candidate = 0;
  bool prime = false;
};

struct PellSequence {
  std::vector<PellTerm> terms;
  bool overflow = false;
};

PellSequence pell_sequence_S8(int count);

std::vector<std::vector<i128>> special_equation_search(std::string_view equation, int bound);

struct TrivialSolution {
  i128 A = 0, B = 0, C = 0;
  bool eight_q_variant = false;
};

std::optional<TrivialSolution> trivial_solutions(i128 q, int alpha);

enum class ScanSet { outside_S, S_minus_S0, S0, T };

std::optional<ScanSet> parse_scan_set(std::string_view s);
std::string scan_set_name(ScanSet s);

inline constexpr i128 scan_guard = 10000000;

std::vector<i128> scan_range(i128 x_max, ScanSet which, int jobs = 1,
                             const SearchBounds& bounds = {}, bool override_guard = false);

struct CensusRow {
  i128 x = 0;
  long count_S = 0, count_S0 = 0, count_T = 0;
};

std::vector<CensusRow> census(i128 x_max, int jobs = 1, const SearchBounds& bounds = {},
                              bool override_guard = false);

}  // namespace tcl
