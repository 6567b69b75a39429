#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "tcl/arith.hpp"
#include "tcl/families.hpp"

using namespace tcl;

namespace {

bool qn_family(const std::string& f) { return f == "36q.5" || f == "72q.10" || f == "72q.12"; }

}  // namespace

TEST(Enumeration, SearchMatchesBruteForceBelow10k) {
  oracle::EnumBounds eb;
  auto expected = oracle::enumerate_families(eb);
  ASSERT_GT(expected.size(), 500u);
  EXPECT_TRUE(expected.at(13).count(Representation{"S8", {{"u", 5}, {"v", 3}}}));
  EXPECT_TRUE(expected.at(53).count(Representation{"36q.7", {{"b", 0}, {"d", -7}}}));
  SearchBounds sb;
  sb.a_max = eb.a_max;
  sb.b_max = eb.b_max;
  sb.d_max = eb.d_max;
  int mismatches = 0;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(eb.q_limit - 1))) {
    if (p < 5) continue;
    std::set<Representation> got;
    for (auto& f : family_ids()) {
      if (qn_family(f)) continue;
      for (auto& r : search_family(p, f, sb)) got.insert(r);
    }
    auto it = expected.find(p);
    std::set<Representation> want = it == expected.end() ? std::set<Representation>{} : it->second;
    if (got != want && ++mismatches <= 5) {
      std::string a, b;
      for (auto& r : got) if (!want.count(r)) a += " " + r.to_string();
      for (auto& r : want) if (!got.count(r)) b += " " + r.to_string();
      ADD_FAILURE() << "q=" << p << " search only:" << a << " brute force only:" << b;
    }
  }
  EXPECT_EQ(mismatches, 0);
}
