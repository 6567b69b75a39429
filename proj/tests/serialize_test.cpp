#include <gtest/gtest.h>

#include <limits>

#include "json.hpp"
#include "tcl/errors.hpp"
#include "tcl/serialize.hpp"

using namespace tcl;

namespace {

template <class F>
errc code(F f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  return errc{};
}

}  // namespace

TEST(Serialize, ClassificationRoundTrip) {
  for (i128 q : {5, 13, 53, 197, 10369}) {
    auto rec = classify_prime(q);
    auto text = to_json(rec);
    auto back = classification_from_json(text);
    EXPECT_EQ(back.q, rec.q);
    EXPECT_EQ(back.reps, rec.reps);
    EXPECT_EQ(back.in_S, rec.in_S);
    EXPECT_EQ(back.in_S0, rec.in_S0);
    EXPECT_EQ(back.in_T, rec.in_T);
    EXPECT_EQ(back.fixed_classes, rec.fixed_classes);
    EXPECT_EQ(back.caveats, rec.caveats);
    EXPECT_EQ(to_json(back), text) << to_string(q);
  }
}

TEST(Serialize, IndentDoesNotChangeContent) {
  auto rec = classify_prime(53);
  EXPECT_EQ(nlohmann::json::parse(to_json(rec, 2)), nlohmann::json::parse(to_json(rec)));
}

TEST(Serialize, ExclusionReportRoundTrip) {
  for (i128 q : {5, 7, 13, 191}) {
    auto rep = excluded_exponents(q, Alpha::of(1));
    auto text = to_json(rep);
    auto back = exclusion_report_from_json(text);
    EXPECT_EQ(back.q, rep.q);
    EXPECT_EQ(back.modulus, rep.modulus);
    EXPECT_EQ(back.incomplete, rep.incomplete);
    EXPECT_EQ(back.excluded.residues(), rep.excluded.residues());
    EXPECT_EQ(back.excluded.modulus(), rep.excluded.modulus());
    EXPECT_EQ(back.rules.size(), rep.rules.size());
    EXPECT_EQ(to_json(back), text) << to_string(q);
  }
}

TEST(Serialize, FreySolutionRoundTrip) {
  auto s = normalize_solution(-2, 1, -1, 7, 1, 3);
  auto back = frey_solution_from_json(to_json(s));
  EXPECT_EQ(back.A, s.A);
  EXPECT_EQ(back.B, s.B);
  EXPECT_EQ(back.C, s.C);
  EXPECT_EQ(back.q, s.q);
  EXPECT_EQ(back.alpha, s.alpha);
  EXPECT_EQ(back.branch, s.branch);
  EXPECT_EQ(back.p, s.p);
  EXPECT_EQ(back.verified, s.verified);

  auto t = normalize_solution(1, 31, 2, 19, 1);
  auto tb = frey_solution_from_json(to_json(t));
  EXPECT_FALSE(tb.p.has_value());
  EXPECT_EQ(tb.branch, 0);
}

TEST(Serialize, WideIntegersAsStrings) {
  FreySolution s;
  s.A = std::numeric_limits<i128>::max();
  s.B = std::numeric_limits<i128>::min();
  s.C = i128(1) << 70;
  s.q = 5;
  auto j = nlohmann::json::parse(to_json(s));
  EXPECT_TRUE(j["A"].is_string());
  EXPECT_TRUE(j["B"].is_string());
  EXPECT_TRUE(j["C"].is_string());
  EXPECT_TRUE(j["q"].is_number_integer());
  auto back = frey_solution_from_json(to_json(s));
  EXPECT_EQ(back.A, s.A);
  EXPECT_EQ(back.B, s.B);
  EXPECT_EQ(back.C, s.C);

  // numbers in string form are accepted for small values too
  j["q"] = "7";
  EXPECT_EQ(frey_solution_from_json(j.dump()).q, 7);
}

TEST(Serialize, CensusCsvRoundTrip) {
  auto rows = census(1000);
  auto text = census_csv(rows);
  EXPECT_EQ(text.substr(0, text.find('\n')), "x,count_S,count_S0,count_T");
  auto back = parse_census_csv(text);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].x, rows[i].x);
    EXPECT_EQ(back[i].count_S, rows[i].count_S);
    EXPECT_EQ(back[i].count_S0, rows[i].count_S0);
    EXPECT_EQ(back[i].count_T, rows[i].count_T);
  }
  EXPECT_EQ(census_csv(back), text);
}

TEST(Serialize, ExclusionTableCsv) {
  auto csv = exclusion_table_csv({excluded_exponents(5, Alpha::of(1))});
  EXPECT_NE(csv.find("5,24,\"13 19 23\""), std::string::npos) << csv;
}

TEST(Serialize, MalformedInput) {
  EXPECT_EQ(code([] { classification_from_json("{"); }), errc::invalid_argument);
  EXPECT_EQ(code([] { frey_solution_from_json("{\"A\": \"12x\"}"); }), errc::invalid_argument);
  EXPECT_EQ(code([] { parse_census_csv("x,count_S\n10,2\n"); }), errc::invalid_argument);
}
