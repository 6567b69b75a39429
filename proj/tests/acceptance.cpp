// End-to-end acceptance run: one PASS/FAIL line per criterion, details
// indented underneath. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "brute.hpp"
#include "frey_oracle.hpp"
#include "tcl/arith.hpp"
#include "tcl/curves.hpp"
#include "tcl/errors.hpp"
#include "tcl/families.hpp"
#include "tcl/frey.hpp"
#include "tcl/reference.hpp"
#include "tcl/sieve.hpp"
#include "tcl_cli/cli.hpp"

using namespace tcl;

namespace {

// wall-clock limits in seconds
constexpr double scan_limit_s = 60;
constexpr double table_limit_s = 120;
constexpr double intersections_limit_s = 600;

constexpr int appendix_samples = 200;
constexpr std::uint64_t appendix_seed = 20240601;
constexpr i128 intersection_bound = 1000000;
constexpr i128 congruence_bound = 1000000;
constexpr int trace_models = 50;
constexpr int trace_ell_max = 100;
constexpr std::uint64_t trace_seed = 99;

using clock_type = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << " s";
  return o.str();
}

Outcome scan_against_golden(const std::string& set, const std::string& golden_file) {
  Outcome o;
  std::ostringstream out, err;
  auto t0 = clock_type::now();
  int code = cli::run_command({"scan", "1000", "--set", set, "--jobs", "1"}, out, err);
  double t = seconds_since(t0);
  std::string body;
  for (auto& l : data_lines(out.str())) body += l + "\n";
  std::string golden = read_file(std::string(TCL_GOLDEN_DIR) + "/" + golden_file);
  o.pass = code == cli::ok && body == golden && t < scan_limit_s;
  o.summary = std::to_string(data_lines(body).size()) + " primes, " + fmt_seconds(t);
  if (code != cli::ok) o.details.push_back("exit " + std::to_string(code) + ": " + err.str());
  if (body != golden) o.details.push_back("output differs from " + golden_file);
  return o;
}

Outcome exclusion_table() {
  Outcome o;
  auto t0 = clock_type::now();
  auto checks = verify_exclusion_table();
  double t = seconds_since(t0);
  int matched = 0;
  bool five_ok = false;
  for (auto& c : checks) {
    auto got = c.report.excluded.reduce();
    auto want = ResidueClassSet(c.row.modulus, c.row.residues);
    if (c.matches) {
      ++matched;
    } else {
      std::string line = "q = " + std::to_string(c.row.q) + ": table " + join(c.row.residues) + " mod " +
                         std::to_string(c.row.modulus) + ", engine ";
      if (c.report.incomplete)
        line += "incomplete";
      else
        line += (got.is_empty() ? "none" : join(got.residues())) + " mod " + std::to_string(got.modulus());
      if (!c.report.incomplete) {
        // work on the common modulus to name the residues in dispute
        std::int64_t m = std::lcm(got.modulus(), want.modulus());
        auto g = got.lift(m), w = want.lift(m);
        std::vector<std::int64_t> uncovered, extra;
        for (auto r : w.residues())
          if (!g.contains(r)) uncovered.push_back(r);
        for (auto r : g.residues())
          if (!w.contains(r)) extra.push_back(r);
        if (!uncovered.empty()) line += "; uncovered " + join(uncovered) + " mod " + std::to_string(m);
        if (!extra.empty()) line += "; extra " + join(extra) + " mod " + std::to_string(m);
      }
      o.details.push_back(line);
    }
    if (c.row.q == 5) five_ok = c.matches && got.modulus() == 24 && got.residues() == std::vector<std::int64_t>{13, 19, 23};
  }
  o.pass = matched == static_cast<int>(checks.size()) && checks.size() == 16 && five_ok && t < table_limit_s;
  o.summary = std::to_string(matched) + "/" + std::to_string(checks.size()) + " rows, " + fmt_seconds(t);
  return o;
}

Outcome appendix() {
  Outcome o;
  auto rows = verify_appendix(appendix_samples, appendix_seed);
  int bad = 0;
  long mismatches = 0;
  for (auto& r : rows) {
    if (r.ok()) continue;
    ++bad;
    mismatches += r.c4_mismatch + r.c6_mismatch + r.disc_mismatch + r.identity_fail;
    std::string line = r.curve + ": c4 " + std::to_string(r.c4_mismatch) + ", c6 " + std::to_string(r.c6_mismatch) +
                       ", disc " + std::to_string(r.disc_mismatch) + ", identity " + std::to_string(r.identity_fail) +
                       " of " + std::to_string(r.samples);
    if (r.first_mismatch) line += " (first at " + r.first_mismatch->to_string() + ")";
    o.details.push_back(line);
  }
  o.pass = bad == 0 && !rows.empty();
  o.summary = std::to_string(rows.size()) + " curve rows, " + std::to_string(bad) + " with " +
              std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome intersections() {
  Outcome o;
  auto t0 = clock_type::now();
  auto checks = verify_intersections(intersection_bound, jobs());
  double t = seconds_since(t0);
  int ok = 0;
  for (auto& c : checks) {
    if (c.ok()) {
      ++ok;
      continue;
    }
    std::string line = "S" + std::to_string(c.claim.i) + " & S" + std::to_string(c.claim.j) + ": found";
    for (auto q : c.found) line += " " + to_string(q);
    o.details.push_back(line);
  }
  o.pass = ok == static_cast<int>(checks.size()) && t < intersections_limit_s;
  o.summary = std::to_string(ok) + "/" + std::to_string(checks.size()) + " intersections, " + fmt_seconds(t);
  return o;
}

Outcome congruences() {
  Outcome o;
  auto checks = verify_congruences(congruence_bound, jobs());
  long candidates = 0;
  int ok = 0;
  for (auto& c : checks) {
    candidates += c.candidates;
    if (c.ok()) {
      ++ok;
      continue;
    }
    std::string line = std::to_string(c.claim.residue) + " mod " + std::to_string(c.claim.modulus) + ":";
    for (auto q : c.in_S0) line += " " + to_string(q);
    o.details.push_back(line);
  }
  o.pass = ok == static_cast<int>(checks.size()) && checks.size() == 5;
  o.summary = std::to_string(ok) + "/" + std::to_string(checks.size()) + " classes, " + std::to_string(candidates) +
              " primes checked";
  return o;
}

Outcome special_equations() {
  using V = std::vector<std::vector<i128>>;
  Outcome o;
  auto frosty = special_equation_search("frosty", 60);
  auto s2s6 = special_equation_search("s2s6", 40);
  bool a = frosty == V{{3, 1}, {5, 3}, {9, 13}};
  bool b = s2s6 == V{{1, 1, 3}, {5, 1, 1}, {11, 3, 1}, {31, 5, 3}};
  auto show = [](const V& v) {
    std::string s;
    for (auto& t : v) {
      s += "(";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + to_string(t[i]);
      s += ")";
    }
    return s;
  };
  if (!a) o.details.push_back("frosty: " + show(frosty));
  if (!b) o.details.push_back("s2s6: " + show(s2s6));
  o.pass = a && b;
  o.summary = std::to_string(frosty.size()) + " + " + std::to_string(s2s6.size()) + " solutions";
  return o;
}

Outcome frey_suite() {
  Outcome o;
  FreySearchBounds fb;
  fb.ab_max = 200;
  fb.q_max = 100;
  fb.exponents = {5, 7};
  auto sols = search_solutions(fb, jobs());
  std::set<oracle::FreyKey> found;
  int bad = 0;
  for (auto& s : sols) {
    found.emplace(static_cast<long>(s.q), s.alpha, s.p.value_or(0), static_cast<long>(s.A), static_cast<long>(s.B),
                  static_cast<long>(s.C));
    auto m = oracle::frey_mismatch(s);
    if (!m.empty()) {
      ++bad;
      if (o.details.size() < 10) o.details.push_back(m);
    }
  }
  auto brute = oracle::frey_solutions_brute(fb.ab_max, static_cast<int>(fb.q_max));
  if (found != brute)
    o.details.push_back("search found " + std::to_string(found.size()) + ", brute force " + std::to_string(brute.size()));

  auto ex = normalize_solution(-2, 1, -1, 7, 1, 3);
  auto inv = weierstrass_invariants(frey_curve(ex));
  auto cc = frey_conductor(ex);
  bool example = inv.disc == -16 * 27 * 49 && cc.conductor() == 504;
  if (!example) o.details.push_back("q = 7 example: disc " + to_string(inv.disc) + ", N " + to_string(cc.conductor()));

  o.pass = bad == 0 && found == brute && example && !sols.empty();
  o.summary = std::to_string(sols.size()) + " solutions, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome trace_oracle() {
  Outcome o;
  std::mt19937_64 rng(trace_seed);
  std::uniform_int_distribution<int> coef(-500, 500);
  int models = 0;
  long pairs = 0, counter = 0, hasse = 0;
  while (models < trace_models) {
    i128 u = coef(rng), v = coef(rng);
    if (v == 0 || u * u - 4 * v == 0) continue;
    ++models;
    CurveModel m;
    m.a2 = u;
    m.a4 = v;
    i128 disc = weierstrass_invariants(m).disc;
    for (std::int64_t ell = 5; ell < trace_ell_max; ell += 2) {
      if (!is_prime(ell) || disc % ell == 0) continue;
      ++pairs;
      i128 a = trace_of_frobenius(m, ell);
      if (a * a > 4 * ell) ++hasse;
      bool pred = four_divisibility_predicate(u, v, ell);
      bool four = mod(a - ell - 1, 4) == 0;
      if (pred != four) {
        ++counter;
        if (o.details.size() < 10)
          o.details.push_back("u = " + to_string(u) + ", v = " + to_string(v) + ", l = " + std::to_string(ell));
      }
    }
  }
  o.pass = counter == 0 && hasse == 0;
  o.summary = std::to_string(pairs) + " (model, l) pairs, " + std::to_string(counter) + " counterexamples, " +
              std::to_string(hasse) + " outside Hasse";
  return o;
}

Outcome cookie() {
  Outcome o;
  auto checks = verify_cookie(97);
  std::int64_t max5 = 0;
  int above = 0;
  for (auto& c : checks) {
    if (c.q == 5) {
      max5 = std::max(max5, c.ell);
      continue;
    }
    if (!c.below_e_q()) {
      ++above;
      o.details.push_back("q = " + std::to_string(c.q) + ", l0 = " + std::to_string(c.ell0) +
                          ", delta = " + std::to_string(c.delta) + ": l = " + std::to_string(c.ell));
    }
  }
  o.pass = above == 0 && max5 == 241 && checks.size() == 8 * 23;  // 23 primes in [5, 97]
  o.summary = std::to_string(checks.size()) + " pairs, max at q = 5 is " + std::to_string(max5);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"scan 1000 outside-S", [] { return scan_against_golden("outside-S", "outside_s_1000.txt"); }},
      {"scan 1000 S-minus-S0", [] { return scan_against_golden("S-minus-S0", "s_minus_s0_1000.txt"); }},
      {"exclusion table", exclusion_table},
      {"appendix sweep", appendix},
      {"intersections to 10^6", intersections},
      {"congruences outside S0", congruences},
      {"special equations", special_equations},
      {"Frey suite", frey_suite},
      {"trace oracle", trace_oracle},
      {"cookie primes", cookie},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].name << ": " << o.summary << '\n';
    for (auto& d : o.details) std::cout << "        " << d << '\n';
    std::cout.flush();
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
