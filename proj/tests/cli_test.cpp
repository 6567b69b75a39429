#include <gtest/gtest.h>

#ifdef TCL_HAVE_CLI

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tcl/serialize.hpp"
#include "tcl_cli/cli.hpp"

using namespace tcl;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::vector<std::string> golden(const std::string& name) {
  std::ifstream in(std::string(TCL_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return data_lines(ss.str());
}

}  // namespace

TEST(Cli, ClassifyJson) {
  auto r = run({"classify", "10369", "--output", "json"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  auto j = json::parse(r.out);
  int n = 0;
  for (auto& rep : j["representations"]) n += rep["family"] == "18q.4";
  EXPECT_EQ(n, 2);
  EXPECT_TRUE(j["in_S0"].get<bool>());

  auto rec = classification_from_json(r.out);
  EXPECT_EQ(rec.q, 10369);
  EXPECT_EQ(json::parse(to_json(rec)), j);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"scan", "2000", "--set", "S0", "--jobs", "4"},
                                        {"sieve", "5", "13", "--output", "json"},
                                        {"classify", "53", "197"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
  auto one = run({"scan", "3000", "--set", "T", "--jobs", "1"});
  auto many = run({"scan", "3000", "--set", "T", "--jobs", "3"});
  EXPECT_EQ(one.out, many.out);
}

TEST(Cli, ScanMatchesGolden) {
  auto r = run({"scan", "1000", "--set", "outside-S"});
  ASSERT_EQ(r.code, cli::ok);
  EXPECT_EQ(data_lines(r.out), golden("outside_s_1000.txt"));
  auto s = run({"scan", "1000", "--set", "S-minus-S0"});
  ASSERT_EQ(s.code, cli::ok);
  EXPECT_EQ(data_lines(s.out), golden("s_minus_s0_1000.txt"));
}

TEST(Cli, SieveFive) {
  auto r = run({"sieve", "5", "--alpha", "1"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_NE(r.out.find("excluded p: 13 19 23 mod 24"), std::string::npos) << r.out;

  auto j = run({"sieve", "5", "--alpha", "1", "--output", "json"});
  ASSERT_EQ(j.code, cli::ok);
  auto rep = exclusion_report_from_json(j.out);
  EXPECT_EQ(rep.excluded.reduce().residues(), (std::vector<std::int64_t>{13, 19, 23}));
}

TEST(Cli, SieveIncomplete) {
  auto r = run({"sieve", "7"});
  EXPECT_EQ(r.code, cli::incomplete);
  EXPECT_NE(r.out.find("incomplete"), std::string::npos);
  // one incomplete prime makes the whole run incomplete
  EXPECT_EQ(run({"sieve", "5", "7"}).code, cli::incomplete);
}

TEST(Cli, FreyJson) {
  auto r = run({"frey", "-2", "1", "-1", "7", "1", "--p", "3", "--output", "json"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["disc"], -21168);
  EXPECT_EQ(j["level"], 72);
  auto s = frey_solution_from_json(r.out);
  EXPECT_EQ(s.q, 7);
  EXPECT_EQ(s.p, 3);
}

TEST(Cli, Census) {
  auto r = run({"census", "1000", "--output", "csv"});
  ASSERT_EQ(r.code, cli::ok);
  auto rows = parse_census_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows.back().x, 1000);
  // 168 primes below 1000, minus 2 and 3
  EXPECT_EQ(rows.back().count_S + 10, 166);
  EXPECT_EQ(rows.back().count_S - rows.back().count_S0, 57);
}

TEST(Cli, Errors) {
  for (std::vector<std::string> args : {std::vector<std::string>{"classify", "15"},
                                        {"classify", "abc"},
                                        {"classify", "3"},
                                        {"sieve", "5", "--alpha", "0"},
                                        {"scan", "1000", "--set", "bogus"},
                                        {"frey", "1", "1", "1", "7", "1"},
                                        {"--bogus"},
                                        {},
                                        {"scan", "100000000000", "--set", "S0"}}) {
    auto r = run(args);
    EXPECT_EQ(r.code, cli::failure) << (args.empty() ? "" : args[0]);
    EXPECT_FALSE(r.err.empty());
  }
}

#endif
