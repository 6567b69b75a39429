#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "tcl/arith.hpp"
#include "tcl/errors.hpp"
#include "tcl/int128.hpp"

using namespace tcl;

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi_symbol(1, 9), 1);
  EXPECT_EQ(jacobi_symbol(6, 7), -1);
  for (i128 p : {7, 17, 23, 31, 41, 47})
    EXPECT_EQ(jacobi_symbol(2, p), 1) << to_string(p);
}

TEST(Jacobi, MatchesSquaresBelow500) {
  for (auto p : primes_up_to(500)) {
    if (p == 2) continue;
    for (int k = -60; k <= 60; ++k)
      ASSERT_EQ(jacobi_symbol(k, p), oracle::legendre_by_squares(k, p)) << k << "/" << p;
  }
}

TEST(Jacobi, Multiplicative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    i128 a = dist(rng), b = dist(rng);
    i128 m = 2 * (std::abs(static_cast<std::int64_t>(dist(rng))) % 5000) + 1;
    EXPECT_EQ(jacobi_symbol(a * b, m), jacobi_symbol(a, m) * jacobi_symbol(b, m));
  }
}

TEST(Jacobi, RejectsEvenModulus) {
  EXPECT_THROW(jacobi_symbol(3, 8), error);
}

TEST(Valuation, Split) {
  auto s = valuation_split(9, 3);
  EXPECT_EQ(s.exponent, 2);
  EXPECT_EQ(s.unit, 1);
  s = valuation_split(-21168, 2);
  EXPECT_EQ(s.exponent, 4);
  EXPECT_EQ(s.unit, -1323);
  s = valuation_split(-21168, 3);
  EXPECT_EQ(s.exponent, 3);
  EXPECT_EQ(s.unit, -784);
  EXPECT_THROW(valuation_split(0, 3), error);
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::int64_t n = -5; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime_naive(n)) << n;
  auto big = primality(parse_i128("170141183460469231731687303715884105727"));
  EXPECT_TRUE(big.prime);
  EXPECT_TRUE(big.probable);
  EXPECT_FALSE(primality(parse_i128("18446744073709551617")).prime);
}

TEST(Arith, SquarefreePart) {
  EXPECT_EQ(squarefree_part(-24), -6);
  EXPECT_EQ(squarefree_part(72), 2);
  EXPECT_EQ(squarefree_part(1), 1);
  EXPECT_EQ(squarefree_part(-27), -3);
}

TEST(Arith, EulerPhi) {
  EXPECT_EQ(euler_phi(24), 8);
  EXPECT_EQ(euler_phi(120), 32);
  EXPECT_EQ(euler_phi(1), 1);
}

TEST(CharacterProfile, MinusSixMod24) {
  auto prof = character_profile(-6, 24);
  ASSERT_EQ(prof.size(), 8u);
  for (int r : {1, 5, 7, 11}) EXPECT_EQ(prof.at(r), 1) << r;
  for (int r : {13, 17, 19, 23}) EXPECT_EQ(prof.at(r), -1) << r;
}

TEST(CharacterProfile, SupplementsMod8) {
  for (auto [r, v] : character_profile(1, 8)) EXPECT_EQ(v, 1) << r;
  auto m1 = character_profile(-1, 8);
  EXPECT_EQ(m1.at(1), 1);
  EXPECT_EQ(m1.at(5), 1);
  EXPECT_EQ(m1.at(3), -1);
  EXPECT_EQ(m1.at(7), -1);
}

TEST(CharacterProfile, MatchesWitnessPrimes) {
  for (i128 kappa : {-1, 2, -2, 3, -3, 6, -6, 5, -5, 7, 10, -42}) {
    std::int64_t M = 24;
    for (auto f : factor(abs128(kappa)).factors)
      if (f.first > 3) M *= static_cast<std::int64_t>(f.first);
    for (auto [r, v] : character_profile(kappa, M)) {
      std::int64_t p = r;
      while (!oracle::is_prime_naive(p) || p < 50) p += M;
      EXPECT_EQ(v, oracle::legendre_by_squares(static_cast<std::int64_t>(kappa), p))
          << to_string(kappa) << " at " << r << " mod " << M;
    }
  }
}

TEST(Int128, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_i128("-170141183460469231731687303715884105728")),
            "-170141183460469231731687303715884105728");
  EXPECT_THROW(parse_i128("12x"), error);
  EXPECT_THROW(parse_i128("170141183460469231731687303715884105728"), error);
  EXPECT_THROW(checked_mul(i128_max, 2), error);
  EXPECT_EQ(isqrt(99), 9);
  EXPECT_TRUE(is_square(144));
  EXPECT_FALSE(exact_sqrt(-4).has_value());
}
