#include "tcl/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace tcl {

using nlohmann::json;

namespace {

json big(i128 v) {
  if (fits64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

i128 big_from(const json& j) {
  if (j.is_string()) return parse_i128(j.get<std::string>());
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw error(errc::invalid_argument, "expected an integer, got " + j.dump());
}

template <class T>
std::optional<T> opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json rep_json(const Representation& r) {
  json p = json::object();
  for (auto& [k, v] : r.params) p[k] = big(v);
  return {{"family", r.family}, {"params", p}};
}

Representation rep_from(const json& j) {
  Representation r;
  r.family = j.at("family").get<std::string>();
  for (auto& [k, v] : j.at("params").items()) r.params[k] = big_from(v);
  return r;
}

json bounds_json(const SearchBounds& b) {
  return {{"a_max", b.a_max}, {"b_max", b.b_max}, {"d_max", big(b.d_max)}, {"n_values", b.n_values}};
}

SearchBounds bounds_from(const json& j) {
  SearchBounds b;
  b.a_max = j.at("a_max").get<int>();
  b.b_max = j.at("b_max").get<int>();
  b.d_max = big_from(j.at("d_max"));
  b.n_values = j.at("n_values").get<std::vector<int>>();
  return b;
}

json set_json(const ResidueClassSet& s) { return {{"modulus", s.modulus()}, {"residues", s.residues()}}; }

ResidueClassSet set_from(const json& j) {
  return {j.at("modulus").get<std::int64_t>(), j.at("residues").get<std::vector<std::int64_t>>()};
}

json alpha_json(const Alpha& a) {
  if (a.value) return *a.value;
  return "symbolic";
}

json rule_json(const ConstraintRule& r) {
  json j = {{"instance", r.instance}, {"model", r.model}, {"wonder", r.wonder}};
  j["rep"] = r.rep ? rep_json(*r.rep) : json(nullptr);
  json br = json::array();
  for (auto& b : r.branches) {
    json chain = json::array();
    for (auto& t : b.chain) chain.push_back({{"kappa", big(t.kappa)}, {"times_alpha", t.times_alpha}, {"place", t.place}});
    br.push_back({{"condition", b.condition}, {"chain", chain}});
  }
  j["branches"] = br;
  j["structural"] = r.structural ? json(*r.structural) : json(nullptr);
  j["unencoded"] = r.unencoded ? json(*r.unencoded) : json(nullptr);
  if (r.trace) {
    json ex = json::array();
    for (i128 p : r.trace->exceptional_primes) ex.push_back(big(p));
    j["trace"] = {{"ell", r.trace->ell}, {"a_ell", big(r.trace->a_ell)}, {"exceptional_primes", ex},
                  {"p_bound", big(r.trace->p_bound)}};
  } else {
    j["trace"] = nullptr;
  }
  return j;
}

ConstraintRule rule_from(const json& j) {
  ConstraintRule r;
  r.instance = j.at("instance").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.wonder = j.at("wonder").get<bool>();
  if (!j.at("rep").is_null()) r.rep = rep_from(j.at("rep"));
  for (auto& b : j.at("branches")) {
    RuleBranch rb;
    rb.condition = b.at("condition").get<std::string>();
    for (auto& t : b.at("chain"))
      rb.chain.push_back({big_from(t.at("kappa")), t.at("times_alpha").get<bool>(), t.at("place").get<std::string>()});
    r.branches.push_back(std::move(rb));
  }
  r.structural = opt<std::string>(j, "structural");
  r.unencoded = opt<std::string>(j, "unencoded");
  if (!j.at("trace").is_null()) {
    const json& t = j.at("trace");
    TraceBound tb;
    tb.ell = t.at("ell").get<std::int64_t>();
    tb.a_ell = big_from(t.at("a_ell"));
    for (auto& p : t.at("exceptional_primes")) tb.exceptional_primes.push_back(big_from(p));
    tb.p_bound = big_from(t.at("p_bound"));
    r.trace = tb;
  }
  return r;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::invalid_argument, std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw error(errc::invalid_argument, std::string("unexpected JSON layout: ") + e.what());
  }
}

}  // namespace

std::string to_json(const ClassificationRecord& rec, int indent) {
  json reps = json::array();
  for (auto& r : rec.reps) reps.push_back(rep_json(r));
  json inst = json::array();
  for (auto& c : rec.curve_instances) {
    inst.push_back({{"label", c.label},
                    {"rep", c.rep ? rep_json(*c.rep) : json(nullptr)},
                    {"level", c.level},
                    {"wonder", c.wonder},
                    {"aliases", c.aliases},
                    {"cremona", c.cremona}});
  }
  json j = {{"q", big(rec.q)},
            {"in_S", rec.in_S},
            {"in_S0", rec.in_S0},
            {"in_T", rec.in_T},
            {"representations", reps},
            {"fixed_classes", rec.fixed_classes},
            {"curve_instances", inst},
            {"caveats", rec.caveats},
            {"bounds", bounds_json(rec.bounds)}};
  return j.dump(indent);
}

ClassificationRecord classification_from_json(std::string_view text) {
  json j = parse(text);
  return guarded([&] {
    ClassificationRecord rec;
    rec.q = big_from(j.at("q"));
    rec.in_S = j.at("in_S").get<bool>();
    rec.in_S0 = j.at("in_S0").get<bool>();
    rec.in_T = j.at("in_T").get<bool>();
    for (auto& r : j.at("representations")) rec.reps.push_back(rep_from(r));
    rec.fixed_classes = j.at("fixed_classes").get<std::vector<std::string>>();
    for (auto& c : j.at("curve_instances")) {
      CurveInstance ci;
      ci.label = c.at("label").get<std::string>();
      if (!c.at("rep").is_null()) ci.rep = rep_from(c.at("rep"));
      ci.level = c.at("level").get<int>();
      ci.wonder = c.at("wonder").get<bool>();
      ci.aliases = c.at("aliases").get<std::vector<std::string>>();
      ci.cremona = c.at("cremona").get<std::string>();
      rec.curve_instances.push_back(std::move(ci));
    }
    rec.caveats = j.at("caveats").get<std::vector<std::string>>();
    rec.bounds = bounds_from(j.at("bounds"));
    return rec;
  });
}

std::string to_json(const ExclusionReport& rep, int indent) {
  json rules = json::array();
  for (auto& r : rep.rules) rules.push_back(rule_json(r));
  json audit = json::array();
  for (auto& a : rep.audit) audit.push_back({{"residue", a.residue}, {"excluded", a.excluded}, {"notes", a.notes}});
  json j = {{"q", big(rep.q)},
            {"alpha", alpha_json(rep.alpha)},
            {"alpha_anchor", rep.alpha.anchor},
            {"modulus", rep.modulus},
            {"excluded", rep.excluded.residues()},
            {"excluded_reduced", set_json(rep.excluded.reduce())},
            {"provisional_excluded", set_json(rep.provisional_excluded)},
            {"units", rep.units},
            {"density", rep.density},
            {"incomplete", rep.incomplete},
            {"rules", rules},
            {"audit", audit},
            {"caveats", rep.caveats}};
  return j.dump(indent);
}

ExclusionReport exclusion_report_from_json(std::string_view text) {
  json j = parse(text);
  return guarded([&] {
    ExclusionReport r;
    r.q = big_from(j.at("q"));
    const json& a = j.at("alpha");
    int anchor = j.at("alpha_anchor").get<int>();
    if (a.is_string()) {
      if (a.get<std::string>() != "symbolic") throw error(errc::invalid_argument, "bad alpha " + a.dump());
      r.alpha = Alpha::symbolic(anchor);
    } else {
      r.alpha = Alpha{a.get<int>(), anchor};
    }
    r.modulus = j.at("modulus").get<std::int64_t>();
    r.excluded = ResidueClassSet(r.modulus, j.at("excluded").get<std::vector<std::int64_t>>());
    r.provisional_excluded = set_from(j.at("provisional_excluded"));
    r.units = j.at("units").get<std::int64_t>();
    r.density = j.at("density").get<double>();
    r.incomplete = j.at("incomplete").get<bool>();
    for (auto& x : j.at("rules")) r.rules.push_back(rule_from(x));
    for (auto& x : j.at("audit"))
      r.audit.push_back({x.at("residue").get<std::int64_t>(), x.at("excluded").get<bool>(),
                         x.at("notes").get<std::vector<std::string>>()});
    r.caveats = j.at("caveats").get<std::vector<std::string>>();
    return r;
  });
}

std::string to_json(const FreySolution& s, int indent) {
  json j = {{"A", big(s.A)}, {"B", big(s.B)},   {"C", big(s.C)},          {"q", big(s.q)},
            {"alpha", s.alpha}, {"branch", s.branch}, {"verified", s.verified}};
  j["p"] = s.p ? json(*s.p) : json(nullptr);
  return j.dump(indent);
}

FreySolution frey_solution_from_json(std::string_view text) {
  json j = parse(text);
  return guarded([&] {
    FreySolution s;
    s.A = big_from(j.at("A"));
    s.B = big_from(j.at("B"));
    s.C = big_from(j.at("C"));
    s.q = big_from(j.at("q"));
    s.alpha = j.at("alpha").get<int>();
    s.branch = j.at("branch").get<int>();
    s.p = opt<int>(j, "p");
    s.verified = j.at("verified").get<bool>();
    return s;
  });
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "x,count_S,count_S0,count_T\n";
  for (auto& r : rows) os << to_string(r.x) << ',' << r.count_S << ',' << r.count_S0 << ',' << r.count_T << '\n';
  return os.str();
}

std::vector<CensusRow> parse_census_csv(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  if (!std::getline(is, line) || line != "x,count_S,count_S0,count_T")
    throw error(errc::invalid_argument, "census CSV header missing");
  std::vector<CensusRow> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string f[4];
    for (auto& s : f)
      if (!std::getline(ls, s, ',')) throw error(errc::invalid_argument, "short census row: " + line);
    try {
      out.push_back({parse_i128(f[0]), std::stol(f[1]), std::stol(f[2]), std::stol(f[3])});
    } catch (const std::logic_error&) {
      throw error(errc::invalid_argument, "bad census row: " + line);
    }
  }
  return out;
}

std::string exclusion_table_csv(const std::vector<ExclusionReport>& reports) {
  std::ostringstream os;
  os << "q,modulus,excluded,status\n";
  for (auto& r : reports) {
    ResidueClassSet red = r.excluded.reduce();
    os << to_string(r.q) << ',' << red.modulus() << ",\"";
    for (std::size_t i = 0; i < red.residues().size(); ++i) os << (i ? " " : "") << red.residues()[i];
    os << "\"," << (r.incomplete ? "incomplete" : "complete") << '\n';
  }
  return os.str();
}

}  // namespace tcl
