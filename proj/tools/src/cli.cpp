#include "tcl_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "tcl/arith.hpp"
#include "tcl/curves.hpp"
#include "tcl/families.hpp"
#include "tcl/frey.hpp"
#include "tcl/reference.hpp"
#include "tcl/serialize.hpp"
#include "tcl/sieve.hpp"

namespace tcl::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string output = "text";
  int jobs = 1;
  std::string bounds_spec;
  std::uint64_t seed = 1;
  bool force = false;
};

SearchBounds parse_bounds(const std::string& spec) {
  SearchBounds b;
  if (spec.empty()) return b;
  std::vector<std::string> parts;
  std::istringstream is(spec);
  for (std::string tok; std::getline(is, tok, ',');) parts.push_back(tok);
  if (parts.size() < 2 || parts.size() > 3)
    throw error(errc::invalid_argument, "--bounds expects a_max,b_max[,d_max]");
  auto small = [](const std::string& s, const char* what) {
    i128 v = parse_i128(s);
    if (v < 0 || v > 1000) throw error(errc::invalid_argument, std::string(what) + " out of range");
    return static_cast<int>(v);
  };
  b.a_max = small(parts[0], "a_max");
  b.b_max = small(parts[1], "b_max");
  if (parts.size() == 3) {
    b.d_max = parse_i128(parts[2]);
    if (b.d_max < 0) throw error(errc::invalid_argument, "d_max must be non-negative");
  }
  return b;
}

json big(i128 v) {
  if (fits64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// expects a reduced set
std::string describe(const ResidueClassSet& s) {
  if (s.is_empty()) return "none";
  if (s.modulus() == 1) return "all";
  return join(s.residues()) + " mod " + std::to_string(s.modulus());
}

std::string bounds_line(const SearchBounds& b) { return "# bounds " + b.to_string(); }

int do_classify(const Globals& g, const std::vector<std::string>& qs, std::ostream& out) {
  SearchBounds bounds = parse_bounds(g.bounds_spec);
  for (auto& s : qs) {
    ClassificationRecord rec = classify_prime(parse_i128(s), bounds);
    if (g.output == "json") {
      out << to_json(rec) << '\n';
      continue;
    }
    if (g.output == "csv") throw error(errc::invalid_argument, "classify has no csv output");
    out << "q = " << to_string(rec.q) << "\n  in S: " << yes(rec.in_S) << "  in S0: " << yes(rec.in_S0)
        << "  in T: " << yes(rec.in_T) << '\n';
    out << "  representations:" << (rec.reps.empty() ? " none" : "") << '\n';
    for (auto& r : rec.reps) out << "    " << r.to_string() << '\n';
    if (!rec.fixed_classes.empty()) {
      out << "  fixed classes:";
      for (auto& f : rec.fixed_classes) out << ' ' << f;
      out << '\n';
    }
    out << "  curve instances:" << (rec.curve_instances.empty() ? " none" : "") << '\n';
    for (auto& c : rec.curve_instances) {
      out << "    " << c.label << "  level " << c.level << "q  " << (c.wonder ? "wonder" : "goose");
      if (!c.cremona.empty()) out << "  (" << c.cremona << ")";
      for (auto& a : c.aliases) out << "  alias " << a;
      out << '\n';
    }
    for (auto& c : rec.caveats) out << "  caveat: " << c << '\n';
    out << "  " << bounds_line(rec.bounds).substr(2) << '\n';
  }
  return ok;
}

int do_census(const Globals& g, i128 x, std::ostream& out, std::ostream& err) {
  SearchBounds bounds = parse_bounds(g.bounds_spec);
  auto rows = census(x, g.jobs, bounds, g.force);
  if (g.output == "json") {
    json j = {{"x_max", big(x)}, {"bounds", bounds.to_string()}, {"rows", json::array()}};
    for (auto& r : rows)
      j["rows"].push_back({{"x", big(r.x)}, {"count_S", r.count_S}, {"count_S0", r.count_S0}, {"count_T", r.count_T}});
    out << j.dump() << '\n';
  } else {
    (g.output == "csv" ? err : out) << bounds_line(bounds) << '\n';
    out << census_csv(rows);
  }
  return ok;
}

int do_scan(const Globals& g, i128 x, const std::string& set, std::ostream& out, std::ostream& err) {
  if (set == "census") return do_census(g, x, out, err);
  auto which = parse_scan_set(set);
  if (!which) throw error(errc::invalid_argument, "unknown set '" + set + "'");
  SearchBounds bounds = parse_bounds(g.bounds_spec);
  auto primes = scan_range(x, *which, g.jobs, bounds, g.force);
  if (g.output == "json") {
    json j = {{"set", scan_set_name(*which)}, {"x_max", big(x)}, {"bounds", bounds.to_string()}, {"primes", json::array()}};
    for (i128 q : primes) j["primes"].push_back(big(q));
    out << j.dump() << '\n';
    return ok;
  }
  if (g.output == "csv") {
    err << bounds_line(bounds) << '\n';
    out << "q\n";
  } else {
    out << "# " << scan_set_name(*which) << " primes up to " << to_string(x) << ": " << primes.size() << '\n'
        << bounds_line(bounds) << '\n';
  }
  for (i128 q : primes) out << to_string(q) << '\n';
  return ok;
}

void print_report_text(const ExclusionReport& r, bool audit, std::ostream& out) {
  ResidueClassSet red = r.excluded.reduce();
  out << "q = " << to_string(r.q) << ", alpha = " << r.alpha.to_string() << '\n';
  out << "  modulus " << r.modulus << ", units " << r.units << '\n';
  if (r.incomplete) {
    out << "  incomplete: no residue is excluded while an instance is unencoded\n";
    ResidueClassSet prov = r.provisional_excluded.reduce();
    out << "  provisional excluded p: " << describe(prov) << '\n';
  } else {
    out << "  excluded p: " << describe(red) << '\n';
  }
  std::ostringstream d;
  d << std::setprecision(6) << r.density;
  out << "  excluded density " << d.str() << '\n';
  out << "  rules:\n";
  for (auto& rule : r.rules) out << "    " << rule.describe() << '\n';
  for (auto& c : r.caveats) out << "  caveat: " << c << '\n';
  if (audit) {
    out << "  audit:\n";
    for (auto& a : r.audit) {
      out << "    " << a.residue << (a.excluded ? " excluded" : " open") << '\n';
      for (auto& n : a.notes) out << "      " << n << '\n';
    }
  }
}

std::vector<Alpha> parse_alpha(const std::string& s) {
  if (s == "symbolic") return {Alpha::symbolic(1), Alpha::symbolic(-1)};
  i128 v = parse_i128(s);
  if (v < 1 || v > 1000000) throw error(errc::invalid_argument, "--alpha must be a positive integer or 'symbolic'");
  return {Alpha::of(static_cast<int>(v))};
}

int do_sieve(const Globals& g, const std::vector<std::string>& qs, const std::string& alpha, bool audit,
             std::ostream& out) {
  SearchBounds bounds = parse_bounds(g.bounds_spec);
  std::vector<ExclusionReport> reports;
  for (auto& s : qs)
    for (auto& a : parse_alpha(alpha)) reports.push_back(excluded_exponents(parse_i128(s), a, bounds));
  if (g.output == "csv") {
    out << exclusion_table_csv(reports);
  } else {
    for (auto& r : reports) {
      if (g.output == "json")
        out << to_json(r) << '\n';
      else
        print_report_text(r, audit, out);
    }
  }
  bool any_incomplete = std::any_of(reports.begin(), reports.end(), [](auto& r) { return r.incomplete; });
  return any_incomplete ? incomplete : ok;
}

int do_frey(const Globals& g, const std::vector<std::string>& v, std::optional<int> p, std::ostream& out) {
  if (v.size() != 5) throw error(errc::invalid_argument, "frey expects A B C q alpha");
  i128 alpha = parse_i128(v[4]);
  if (alpha < 1 || alpha > 1000) throw error(errc::invalid_argument, "alpha out of range");
  FreySolution s = normalize_solution(parse_i128(v[0]), parse_i128(v[1]), parse_i128(v[2]), parse_i128(v[3]),
                                      static_cast<int>(alpha), p);
  CurveModel m = frey_curve(s);
  Invariants inv = weierstrass_invariants(m);
  ConductorClass cc = frey_conductor(s);
  if (g.output == "json") {
    json j = json::parse(to_json(s));
    j["curve"] = {big(m.a1), big(m.a2), big(m.a3), big(m.a4), big(m.a6)};
    j["c4"] = big(inv.c4);
    j["c6"] = big(inv.c6);
    j["disc"] = big(inv.disc);
    j["level"] = cc.level;
    j["R"] = big(cc.R);
    j["R_known"] = cc.R_known;
    out << j.dump() << '\n';
    return ok;
  }
  if (g.output == "csv") throw error(errc::invalid_argument, "frey has no csv output");
  out << "normalised (A, B, C) = (" << to_string(s.A) << ", " << to_string(s.B) << ", " << to_string(s.C) << "), q = "
      << to_string(s.q) << ", alpha = " << s.alpha << ", C " << (s.branch == 0 ? "even" : "odd") << '\n';
  out << "  identity " << (s.verified ? "verified" : "checked modulo q^alpha only") << '\n';
  out << "  curve " << describe(m) << '\n';
  out << "  c4 = " << to_string(inv.c4) << "  c6 = " << to_string(inv.c6) << "  disc = " << to_string(inv.disc) << '\n';
  out << "  conductor " << cc.level << "q" << (cc.R == 1 ? "" : " * " + to_string(cc.R));
  if (cc.R_known) out << " = " << to_string(cc.conductor());
  else out << " (R not fully factored)";
  out << '\n';
  return ok;
}

int verify_appendix_cmd(const Globals& g, int samples, std::ostream& out, std::ostream& err) {
  auto rows = verify_appendix(samples, g.seed);
  int bad = 0;
  json j = json::array();
  for (auto& r : rows) {
    bad += !r.ok();
    if (g.output == "json") {
      j.push_back({{"curve", r.curve}, {"samples", r.samples}, {"c4_mismatch", r.c4_mismatch},
                   {"c6_mismatch", r.c6_mismatch}, {"disc_mismatch", r.disc_mismatch},
                   {"identity_fail", r.identity_fail},
                   {"first_mismatch", r.first_mismatch ? r.first_mismatch->to_string() : ""}});
      continue;
    }
    out << std::left << std::setw(10) << r.curve << (r.ok() ? " ok" : " MISMATCH");
    if (!r.ok())
      out << "  c4 " << r.c4_mismatch << ", c6 " << r.c6_mismatch << ", disc " << r.disc_mismatch << ", identity "
          << r.identity_fail << " of " << r.samples << "; e.g. " << r.first_mismatch->to_string();
    out << '\n';
  }
  if (g.output == "json") out << j.dump() << '\n';
  if (bad) err << bad << " of " << rows.size() << " rows disagree with the closed forms\n";
  return bad ? failure : ok;
}

int verify_tables_cmd(const Globals& g, std::ostream& out, std::ostream& err) {
  auto checks = verify_exclusion_table(parse_bounds(g.bounds_spec));
  int bad = 0;
  json j = json::array();
  for (auto& c : checks) {
    bad += !c.matches;
    ResidueClassSet red = c.report.excluded.reduce();
    std::vector<std::int64_t> missing, extra;
    ResidueClassSet want(c.row.modulus, c.row.residues);
    std::int64_t L = std::lcm(red.modulus(), want.modulus());
    ResidueClassSet a = red.lift(L), b = want.lift(L);
    for (auto r : b.residues())
      if (!a.contains(r)) missing.push_back(r);
    for (auto r : a.residues())
      if (!b.contains(r)) extra.push_back(r);
    if (g.output == "json") {
      j.push_back({{"q", c.row.q}, {"expected_modulus", c.row.modulus}, {"expected", c.row.residues},
                   {"modulus", red.modulus()}, {"excluded", red.residues()}, {"incomplete", c.report.incomplete},
                   {"matches", c.matches}, {"missing_mod_lcm", missing}, {"extra_mod_lcm", extra}, {"lcm", L}});
      continue;
    }
    out << "q = " << std::setw(3) << c.row.q << (c.matches ? "  ok      " : "  MISMATCH") << "  expected {"
        << join(c.row.residues) << "} mod " << c.row.modulus << ", got {" << join(red.residues()) << "} mod "
        << red.modulus();
    if (!c.matches) {
      if (!missing.empty()) out << "; uncovered mod " << L << ": " << join(missing);
      if (!extra.empty()) out << "; extra mod " << L << ": " << join(extra);
      if (c.report.incomplete) out << "; incomplete";
    }
    out << '\n';
  }
  if (g.output == "json") out << j.dump() << '\n';
  if (bad) err << bad << " of " << checks.size() << " table rows not reproduced\n";
  return bad ? failure : ok;
}

int verify_intersections_cmd(const Globals& g, i128 bound, std::ostream& out, std::ostream& err) {
  auto checks = verify_intersections(bound, g.jobs);
  auto congr = verify_congruences(bound, g.jobs);
  int bad = 0;
  json j = {{"bound", big(bound)}, {"intersections", json::array()}, {"congruences", json::array()}};
  if (g.output != "json") out << "bound " << to_string(bound) << '\n';
  for (auto& c : checks) {
    bad += !c.ok();
    std::vector<std::int64_t> found;
    for (i128 q : c.found) found.push_back(static_cast<std::int64_t>(q));
    if (g.output == "json") {
      j["intersections"].push_back({{"i", c.claim.i}, {"j", c.claim.j}, {"expected", c.claim.members},
                                    {"found", found}, {"ok", c.ok()}});
      continue;
    }
    out << "S" << c.claim.i << " & S" << c.claim.j << ": {" << join(found) << "}" << (c.ok() ? " ok" : " MISMATCH")
        << '\n';
  }
  for (auto& c : congr) {
    bad += !c.ok();
    std::vector<std::int64_t> hits;
    for (i128 q : c.in_S0) hits.push_back(static_cast<std::int64_t>(q));
    if (g.output == "json") {
      j["congruences"].push_back({{"residue", c.claim.residue}, {"modulus", c.claim.modulus},
                                  {"candidates", c.candidates}, {"in_S0", hits}, {"ok", c.ok()}});
      continue;
    }
    out << "q = " << c.claim.residue << " mod " << c.claim.modulus << ": " << c.candidates << " primes, "
        << (c.ok() ? "none in S0" : "in S0: " + join(hits)) << '\n';
  }
  if (g.output == "json") out << j.dump() << '\n';
  if (bad) err << bad << " claims failed\n";
  return bad ? failure : ok;
}

int verify_cookie_cmd(const Globals& g, int q_max, std::ostream& out, std::ostream& err) {
  auto checks = verify_cookie(q_max);
  int bad = 0;
  std::int64_t max5 = 0;
  json j = json::array();
  for (auto& c : checks) {
    if (c.q == 5) max5 = std::max(max5, c.ell);
    bool pass = c.q == 5 || c.below_e_q();
    bad += !pass;
    if (g.output == "json") {
      j.push_back({{"q", c.q}, {"ell0", c.ell0}, {"delta", c.delta}, {"ell", c.ell}, {"below_e_q", c.below_e_q()}});
      continue;
    }
    out << "q = " << std::setw(3) << c.q << "  l0 = " << std::setw(2) << c.ell0 << "  delta = " << c.delta
        << "  l = " << std::setw(5) << c.ell << (c.below_e_q() ? "  < e^q" : "  >= e^q") << '\n';
  }
  if (g.output == "json") out << j.dump() << '\n';
  else out << "max over pairs for q = 5: " << max5 << '\n';
  if (bad) err << bad << " pairs with l >= e^q\n";
  return bad ? failure : ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification of primes q for x^3 + y^3 = q^alpha z^p and exponent sieves", "tcl"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--bounds", g.bounds_spec, "Search bounds a_max,b_max[,d_max]");
  app.add_option("--seed", g.seed, "Seed for randomised sweeps");
  app.add_flag("--force", g.force, "Allow scans beyond the default size guard");

  std::vector<std::string> qs;
  auto* classify = app.add_subcommand("classify", "Classify primes q");
  classify->add_option("q", qs, "Primes")->required();
  classify->fallthrough();

  std::string x_text, set;
  auto* scan = app.add_subcommand("scan", "List primes 5 <= q <= x in a set");
  scan->add_option("x", x_text, "Upper bound")->required();
  scan->add_option("--set", set, "outside-S, S-minus-S0, S0, T or census")->required();
  scan->fallthrough();

  auto* census_cmd = app.add_subcommand("census", "Cumulative counts of S, S0 and T at powers of ten");
  census_cmd->add_option("x", x_text, "Upper bound")->required();
  census_cmd->fallthrough();

  std::string alpha = "1";
  bool audit = false;
  auto* sieve = app.add_subcommand("sieve", "Excluded exponent classes p mod M");
  sieve->add_option("q", qs, "Primes")->required();
  sieve->add_option("--alpha", alpha, "Positive integer or 'symbolic'");
  sieve->add_flag("--audit", audit, "Show how each residue is decided");
  sieve->fallthrough();

  std::vector<std::string> frey_args;
  std::optional<int> p;
  auto* frey = app.add_subcommand("frey", "Frey curve and conductor of A^3 + B^3 = q^alpha C^p");
  frey->add_option("values", frey_args, "A B C q alpha")->required()->expected(5);
  frey->add_option("--p", p, "Exponent, checks the identity exactly")->check(CLI::Range(2, 1000));
  frey->fallthrough();

  std::string what;
  int samples = 200, q_max = 97;
  std::string bound_text = "1000000";
  auto* verify = app.add_subcommand("verify", "Reproduce reference tables");
  verify->add_option("what", what, "appendix, tables, intersections or cookie")
      ->required()
      ->check(CLI::IsMember({"appendix", "tables", "intersections", "cookie"}));
  verify->add_option("--samples", samples, "Parameter tuples per family (appendix)")->check(CLI::Range(1, 100000));
  verify->add_option("--bound", bound_text, "Search bound (intersections)");
  verify->add_option("--q-max", q_max, "Largest q (cookie)")->check(CLI::Range(5, 1000));
  verify->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : failure;
  }

  try {
    if (*classify) return do_classify(g, qs, out);
    if (*scan) return do_scan(g, parse_i128(x_text), set, out, err);
    if (*census_cmd) return do_census(g, parse_i128(x_text), out, err);
    if (*sieve) return do_sieve(g, qs, alpha, audit, out);
    if (*frey) return do_frey(g, frey_args, p, out);
    if (*verify) {
      if (what == "appendix") return verify_appendix_cmd(g, samples, out, err);
      if (what == "tables") return verify_tables_cmd(g, out, err);
      if (what == "intersections") return verify_intersections_cmd(g, parse_i128(bound_text), out, err);
      return verify_cookie_cmd(g, q_max, out, err);
    }
  } catch (const error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << '\n';
    return failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return failure;
}

}  // namespace tcl::cli
