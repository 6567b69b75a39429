#include <gtest/gtest.h>

#include <random>

#include "tcl/residue_set.hpp"

using namespace tcl;

namespace {

ResidueClassSet random_set(std::mt19937_64& rng) {
  static const std::int64_t moduli[] = {1, 3, 4, 5, 8, 12, 24, 40, 120};
  std::int64_t m = moduli[rng() % std::size(moduli)];
  std::vector<std::int64_t> rs;
  auto units = ResidueClassSet::all_units(m);
  for (auto r : units.residues())
    if (rng() % 2) rs.push_back(r);
  return {m, rs};
}

}  // namespace

TEST(ResidueSet, MeetExample) {
  auto got = residue_set_meet({8, {1, 5}}, {3, {1, 2}});
  EXPECT_EQ(got.modulus(), 24);
  EXPECT_EQ(got.residues(), (std::vector<std::int64_t>{1, 5, 13, 17}));
}

TEST(ResidueSet, IdentityAndDisjoint) {
  ResidueClassSet x(8, {3, 5});
  EXPECT_TRUE(residue_set_meet(x, ResidueClassSet::all_units(1)).same_set(x));
  EXPECT_TRUE(residue_set_meet({8, {3}}, {8, {1}}).is_empty());
}

TEST(ResidueSet, RejectsNonUnits) {
  EXPECT_THROW(ResidueClassSet(8, {2}), std::exception);
  EXPECT_THROW(ResidueClassSet(0, {}), std::exception);
}

TEST(ResidueSet, LiftProjectReduce) {
  ResidueClassSet x(24, {13, 19, 23});
  EXPECT_TRUE(x.lift(120).same_set(x));
  EXPECT_EQ(x.lift(120).size(), 12u);
  ResidueClassSet y(24, {5, 11, 17, 23});
  EXPECT_EQ(y.reduce().modulus(), 3);
  EXPECT_TRUE(y.is_union_mod(6));
  EXPECT_TRUE(y.reduce().same_set(y));
  EXPECT_FALSE(x.is_union_mod(8));
  EXPECT_TRUE(x.project(12).is_empty());
  EXPECT_EQ(ResidueClassSet(24, {11, 13, 19, 23}).project(12).residues(), (std::vector<std::int64_t>{11}));
  EXPECT_THROW(x.lift(100), std::exception);
}

TEST(ResidueSet, MeetLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto a = random_set(rng), b = random_set(rng), c = random_set(rng);
    EXPECT_TRUE(residue_set_meet(a, b).same_set(residue_set_meet(b, a)));
    EXPECT_TRUE(residue_set_meet(residue_set_meet(a, b), c).same_set(residue_set_meet(a, residue_set_meet(b, c))));
    EXPECT_TRUE(residue_set_meet(a, a).same_set(a));
    EXPECT_TRUE(residue_set_join(a, b).same_set(residue_set_join(b, a)));
    EXPECT_TRUE(residue_set_meet(a, a.complement()).is_empty());
  }
}

TEST(ResidueSet, ToString) {
  EXPECT_EQ(ResidueClassSet(24, {13, 19, 23}).to_string(), "{13,19,23} mod 24");
}
