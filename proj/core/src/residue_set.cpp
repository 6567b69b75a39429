#include "tcl/residue_set.hpp"

#include <algorithm>
#include <numeric>

#include "tcl/errors.hpp"

namespace tcl {

namespace {

std::int64_t reduce_mod(std::int64_t r, std::int64_t m) { return ((r % m) + m) % m; }

void check_modulus(std::int64_t m) {
  if (m <= 0) throw error(errc::invalid_argument, "residue set modulus must be positive");
  if (m > (std::int64_t{1} << 32)) throw error(errc::invalid_argument, "residue set modulus too large");
}

}  // namespace

ResidueClassSet::ResidueClassSet(std::int64_t modulus, std::vector<std::int64_t> residues)
    : modulus_(modulus) {
  check_modulus(modulus);
  for (auto& r : residues) {
    r = reduce_mod(r, modulus);
    if (std::gcd(r, modulus) != 1)
      throw error(errc::invalid_argument,
                  std::to_string(r) + " is not a unit modulo " + std::to_string(modulus));
  }
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  residues_ = std::move(residues);
}

ResidueClassSet ResidueClassSet::all_units(std::int64_t m) {
  check_modulus(m);
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < m; ++r)
    if (std::gcd(r, m) == 1) rs.push_back(r);
  return ResidueClassSet(m, std::move(rs));
}

ResidueClassSet ResidueClassSet::empty(std::int64_t m) { return ResidueClassSet(m, {}); }

bool ResidueClassSet::contains(std::int64_t r) const {
  return std::binary_search(residues_.begin(), residues_.end(), reduce_mod(r, modulus_));
}

ResidueClassSet ResidueClassSet::lift(std::int64_t target) const {
  if (target % modulus_ != 0)
    throw error(errc::invalid_argument, "lift target must be a multiple of the modulus");
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < target; ++r)
    if (std::gcd(r, target) == 1 && contains(r)) rs.push_back(r);
  return ResidueClassSet(target, std::move(rs));
}

bool ResidueClassSet::is_union_mod(std::int64_t m) const {
  if (m <= 0 || modulus_ % m != 0) return false;
  for (std::int64_t r = 0; r < modulus_; ++r) {
    if (std::gcd(r, modulus_) != 1) continue;
    bool in = contains(r);
    for (std::int64_t s = r % m; s < modulus_; s += m)
      if (std::gcd(s, modulus_) == 1 && contains(s) != in) return false;
  }
  return true;
}

ResidueClassSet ResidueClassSet::project(std::int64_t m) const {
  if (m <= 0 || modulus_ % m != 0)
    throw error(errc::invalid_argument, "projection modulus must divide " + std::to_string(modulus_));
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < m; ++r) {
    if (std::gcd(r, m) != 1) continue;
    bool all = true;
    for (std::int64_t s = r; s < modulus_ && all; s += m)
      if (std::gcd(s, modulus_) == 1 && !contains(s)) all = false;
    if (all) rs.push_back(r);
  }
  return ResidueClassSet(m, std::move(rs));
}

ResidueClassSet ResidueClassSet::reduce() const {
  std::int64_t best = modulus_;
  for (std::int64_t d = 1; d < modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    if (is_union_mod(d)) {
      best = d;
      break;
    }
  }
  return best == modulus_ ? *this : project(best);
}

ResidueClassSet ResidueClassSet::complement() const {
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < modulus_; ++r)
    if (std::gcd(r, modulus_) == 1 && !contains(r)) rs.push_back(r);
  return ResidueClassSet(modulus_, std::move(rs));
}

bool ResidueClassSet::same_set(const ResidueClassSet& other) const {
  std::int64_t l = std::lcm(modulus_, other.modulus_);
  return lift(l) == other.lift(l);
}

std::string ResidueClassSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(residues_[i]);
  }
  s += "} mod " + std::to_string(modulus_);
  return s;
}

ResidueClassSet residue_set_meet(const ResidueClassSet& a, const ResidueClassSet& b) {
  std::int64_t l = std::lcm(a.modulus(), b.modulus());
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < l; ++r)
    if (std::gcd(r, l) == 1 && a.contains(r) && b.contains(r)) rs.push_back(r);
  return ResidueClassSet(l, std::move(rs));
}

ResidueClassSet residue_set_join(const ResidueClassSet& a, const ResidueClassSet& b) {
  std::int64_t l = std::lcm(a.modulus(), b.modulus());
  std::vector<std::int64_t> rs;
  for (std::int64_t r = 0; r < l; ++r)
    if (std::gcd(r, l) == 1 && (a.contains(r) || b.contains(r))) rs.push_back(r);
  return ResidueClassSet(l, std::move(rs));
}

}  // namespace tcl
