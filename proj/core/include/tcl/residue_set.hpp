#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tcl {

// A set of unit residue classes modulo `modulus`.
class ResidueClassSet {
 public:
  ResidueClassSet() = default;
  ResidueClassSet(std::int64_t modulus, std::vector<std::int64_t> residues);

  static ResidueClassSet all_units(std::int64_t modulus);
  static ResidueClassSet empty(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& residues() const { return residues_; }
  std::size_t size() const { return residues_.size(); }
  bool is_empty() const { return residues_.empty(); }
  bool contains(std::int64_t r) const;

  // same set, expressed modulo target (a multiple of the modulus)
  ResidueClassSet lift(std::int64_t target) const;
  // true if membership only depends on r mod m (m | modulus)
  bool is_union_mod(std::int64_t m) const;
  // classes mod m (m | modulus) all of whose unit lifts lie in the set
  ResidueClassSet project(std::int64_t m) const;
  // coarsest modulus dividing the current one that still describes the set
  ResidueClassSet reduce() const;
  ResidueClassSet complement() const;

  // equality as sets of integers
  bool same_set(const ResidueClassSet& other) const;
  bool operator==(const ResidueClassSet& other) const = default;

  std::string to_string() const;

 private:
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> residues_;
};

ResidueClassSet residue_set_meet(const ResidueClassSet& a, const ResidueClassSet& b);
ResidueClassSet residue_set_join(const ResidueClassSet& a, const ResidueClassSet& b);

}  // namespace tcl
