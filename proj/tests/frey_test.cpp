#include <gtest/gtest.h>

#include "brute.hpp"
#include "frey_oracle.hpp"
#include "tcl/arith.hpp"
#include "tcl/curves.hpp"
#include "tcl/errors.hpp"
#include "tcl/frey.hpp"

using namespace tcl;

TEST(Normalize, Examples) {
  auto s = normalize_solution(2, -1, 1, 7, 1, 3);
  EXPECT_EQ(s.A, -2);
  EXPECT_EQ(s.B, 1);
  EXPECT_EQ(s.C, -1);
  EXPECT_EQ(s.branch, 1);
  EXPECT_TRUE(s.verified);
  auto t = normalize_solution(-1, 2, 1, 7, 1, 3);
  EXPECT_EQ(t.A, s.A);
  EXPECT_EQ(t.B, s.B);
  auto u = normalize_solution(2, -1, 1, 7, 1);
  EXPECT_FALSE(u.verified);
}

TEST(Normalize, Errors) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const error& e) {
      return e.code();
    }
    return errc::bad_dataset;
  };
  EXPECT_EQ(code([] { normalize_solution(2, 1, 1, 3, 2, 3); }), errc::not_a_solution);
  EXPECT_EQ(code([] { normalize_solution(2, -1, 2, 7, 1, 5); }), errc::not_a_solution);
  EXPECT_EQ(code([] { normalize_solution(2, 4, 1, 7, 1); }), errc::not_a_solution);
  EXPECT_EQ(code([] { normalize_solution(0, 1, 1, 7, 1); }), errc::invalid_argument);
  // 1 + 1 = 2 is not divisible by 7
  EXPECT_EQ(code([] { normalize_solution(1, 1, 1, 7, 1); }), errc::not_a_solution);
}

TEST(FreyCurve, SevenExample) {
  auto s = normalize_solution(-2, 1, -1, 7, 1, 3);
  auto m = frey_curve(s);
  EXPECT_EQ(m.a1, 0);
  EXPECT_EQ(m.a4, -6);
  EXPECT_EQ(m.a6, 9);
  auto inv = weierstrass_invariants(m);
  EXPECT_EQ(inv.c4, 288);
  EXPECT_EQ(inv.c6, -7776);
  EXPECT_EQ(inv.disc, -16 * 27 * 49);
  auto cc = frey_conductor(s);
  EXPECT_EQ(cc.level, 72);
  EXPECT_EQ(cc.R, 1);
  EXPECT_EQ(cc.conductor(), 504);
  EXPECT_EQ(oracle::frey_mismatch(s), "");
}

TEST(FreyCurve, LevelCases) {
  // -4^3 + 1 = -63 = 7 * (-9): C odd, v2(A) = 2
  auto s = normalize_solution(-4, 1, -9, 7, 1);
  EXPECT_EQ(frey_conductor(s).level, 36);
  // 1 + 31^3 = 32 * 7^2 * 19, C even, exponent left open
  auto t = normalize_solution(1, 31, 2, 19, 1);
  EXPECT_EQ(t.branch, 0);
  EXPECT_EQ(frey_conductor(t).level, 18);
  auto m = frey_curve(t);
  EXPECT_EQ(m.a1, 1);
  EXPECT_EQ(m.a2, 11);
  auto inv = weierstrass_invariants(m);
  EXPECT_EQ(inv.c4, -9 * 31);
  EXPECT_EQ(2 * inv.c6, 27 * (1 - 29791));
  EXPECT_EQ(256 * inv.disc, -27 * i128(29792) * 29792);
}

TEST(FreySearch, MatchesIndependentEnumeration) {
  FreySearchBounds b;
  b.ab_max = 60;
  auto got = search_solutions(b);
  std::set<oracle::FreyKey> lib;
  for (auto& s : got)
    lib.insert({static_cast<long>(s.q), s.alpha, *s.p, static_cast<long>(s.A), static_cast<long>(s.B),
                static_cast<long>(s.C)});
  EXPECT_EQ(lib.size(), got.size());
  EXPECT_EQ(lib, oracle::frey_solutions_brute(60, 100));
}

TEST(FreySearch, InvariantsAndLevels) {
  auto sols = search_solutions({}, 2);
  ASSERT_FALSE(sols.empty());
  int even = 0;
  for (auto& s : sols) {
    ASSERT_EQ(oracle::frey_mismatch(s), "") << to_string(s.A) << "," << to_string(s.B) << "," << to_string(s.C);
    auto inv = weierstrass_invariants(frey_curve(s));
    EXPECT_EQ(discriminant_square_class(inv.disc).kind, SquareKind::minus3_square);
    if (s.branch == 0) {
      ++even;
      EXPECT_EQ(valuation(inv.disc, 2), 2 * *s.p * valuation(s.C, 2) - 8);
    }
  }
  // C even needs 2^p | A + B; no such solution lies in this box
  EXPECT_EQ(even, 0);
}

TEST(FreySearch, JobsDoNotChangeOutput) {
  FreySearchBounds b;
  b.ab_max = 80;
  auto one = search_solutions(b, 1);
  auto three = search_solutions(b, 3);
  ASSERT_EQ(one.size(), three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].A, three[i].A);
    EXPECT_EQ(one[i].B, three[i].B);
    EXPECT_EQ(one[i].q, three[i].q);
  }
}
