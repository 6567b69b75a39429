#include "tcl/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "tcl/arith.hpp"
#include "tcl/fixed_classes.hpp"

namespace tcl {

std::string Alpha::to_string() const {
  if (value) return std::to_string(*value);
  return anchor > 0 ? "symbolic(+1)" : "symbolic(-1)";
}

std::string ConstraintRule::describe() const {
  std::ostringstream os;
  os << instance;
  if (!model.empty()) os << " [" << model << "]";
  if (unencoded) return os.str() + ": unencoded (" + *unencoded + ")";
  if (structural) return os.str() + ": killed (" + *structural + ")";
  for (auto& b : branches) {
    os << (b.condition == "any" ? ": " : "; " + b.condition + ": ");
    for (std::size_t i = 0; i < b.chain.size(); ++i) {
      auto& t = b.chain[i];
      os << (i ? " = " : "") << "chi(";
      if (t.times_alpha) os << (t.kappa == 1 ? "alpha" : to_string(t.kappa) + "*alpha");
      else os << to_string(t.kappa);
      os << ")";
    }
  }
  return os.str();
}

namespace {

constexpr int kInf = 1 << 20;

struct LocalData {
  int c4 = 0, c6 = 0, d = 0;
  i128 d_unit = 0;
};

LocalData local(const Invariants& inv, i128 ell) {
  LocalData ld;
  ld.c4 = inv.c4 ? valuation(inv.c4, ell) : kInf;
  ld.c6 = inv.c6 ? valuation(inv.c6, ell) : kInf;
  auto s = valuation_split(inv.disc, ell);
  ld.d = s.exponent;
  ld.d_unit = s.unit;
  return ld;
}

std::string sig(const LocalData& ld) {
  auto v = [](int x) { return x == kInf ? std::string("inf") : std::to_string(x); };
  return "(" + v(ld.c4) + "," + v(ld.c6) + "," + v(ld.d) + ")";
}

struct Local {
  std::vector<ChainTerm> terms;  // q, then 2 (when not branch-dependent), then 3
  std::optional<std::string> structural;
  std::optional<std::string> unencoded;
  std::optional<ChainTerm> at3;
};

// recipe layers read off the valuations of a model of conductor level*q
Local derive_local(const CurveModel& m, int level, i128 q) {
  Local out;
  Invariants inv = weierstrass_invariants(m);

  LocalData lq = local(inv, q);
  if (lq.c4 != 0 || lq.d == 0) {
    out.unencoded = "reduction at q is not multiplicative, signature " + sig(lq);
    return out;
  }
  out.terms.push_back({squarefree_part(2 * lq.d), true, "q"});

  LocalData l2 = local(inv, 2);
  if (level == 18) {
    if (l2.c4 != 0) {
      out.unencoded = "level 18q model not multiplicative at 2, signature " + sig(l2);
      return out;
    }
    out.terms.push_back({squarefree_part(-8 * i128(l2.d)), false, "2"});
  } else if (level == 72) {
    bool a = (l2.c4 == 4 && l2.c6 == 6 && l2.d == 10) || (l2.c4 == 5 && l2.c6 == 5 && l2.d == 4);
    bool b = l2.c4 == 4 && l2.c6 == 6 && l2.d == 8 && mod(l2.d_unit, 4) == 1;
    if (a) out.terms.push_back({1, false, "2"});
    else if (b) out.terms.push_back({2, false, "2"});
    else {
      out.unencoded = "no encoded rule at 2 for signature " + sig(l2);
      return out;
    }
  }

  LocalData l3 = local(inv, 3);
  if (l3.d == 6 && l3.c6 >= 7) {
    out.structural = "inertia at 3 has order 2 for E and 4 for F";
    return out;
  }
  if (l3.c4 == 2 && l3.c6 == 3 && l3.d >= 7) {
    out.at3 = ChainTerm{squarefree_part(-3 * i128(l3.d - 6)), false, "3"};
  } else if ((l3.d == 3 || l3.d == 9) && 3 * l3.c4 >= l3.d) {
    int r = l3.d == 9 ? 1 : 0;
    int t = mod(l3.d_unit, 3) != 2 ? 1 : 0;
    out.at3 = ChainTerm{i128(1) << t, false, "3"};
    if (r) out.at3->kappa *= 3;
  } else {
    out.unencoded = "no encoded rule at 3 for signature " + sig(l3);
    return out;
  }
  out.terms.push_back(*out.at3);
  return out;
}

// B mod 8 branch tables for the 36q families
std::optional<std::vector<RuleBranch>> branches_36q(const Representation& r, const std::string& letter,
                                                    i128 q, const ChainTerm& tq, const ChainTerm& t3,
                                                    std::string& why) {
  auto mk = [&](i128 k1, i128 k5) {
    return std::vector<RuleBranch>{{"B = 1 mod 8", {tq, {k1, false, "2"}, t3}},
                                   {"B = 5 mod 8", {tq, {k5, false, "2"}, t3}}};
  };
  const std::string& f = r.family;
  if (f == "36q.1") {
    i128 uv = checked_mul(r.get("u"), r.get("v"));
    if (mod(uv, 16) != 1) {
      why = "uv = " + to_string(mod(uv, 16)) + " mod 16, branch table needs uv = 1 mod 16";
      return std::nullopt;
    }
    return letter == "a" ? mk(2, 6) : mk(6, 2);
  }
  if (f == "36q.2") {
    i128 d16 = mod(r.get("d"), 16);
    bool one = d16 == 1, nine = d16 == 9;
    if (letter == "a") return mk(one ? 1 : 3, nine ? 1 : 3);
    return mk(nine ? 1 : 3, one ? 1 : 3);
  }
  if (f == "36q.3") {
    i128 d = r.get("d");
    return mk(mod(q - d - 2, 8) == 0 ? 1 : 3, mod(q - d + 2, 8) == 0 ? 1 : 3);
  }
  why = "no branch table for " + f;
  return std::nullopt;
}

i128 fold_alpha(i128 kappa, const Alpha& alpha) {
  return squarefree_part(checked_mul(kappa, alpha.value.value_or(1)));
}

void apply_alpha(std::vector<RuleBranch>& branches, const Alpha& alpha) {
  if (alpha.is_symbolic()) return;
  for (auto& b : branches)
    for (auto& t : b.chain)
      if (t.times_alpha) {
        t.kappa = fold_alpha(t.kappa, alpha);
        t.times_alpha = false;
      }
}

void kill_by_trace(ConstraintRule& rule, const CurveModel& m) {
  if (auto tb = trace_obstruction_bound(m)) {
    rule.trace = tb;
    rule.structural = "a_" + std::to_string(tb->ell) + " = " + to_string(tb->a_ell) + " not = l+1 mod 4, p <= " +
                      to_string(tb->p_bound);
  } else {
    rule.unencoded = "no trace obstruction found";
  }
}

ConstraintRule rule_from_model(std::string instance, const CurveModel& m, int level, i128 q) {
  ConstraintRule rule;
  rule.instance = std::move(instance);
  rule.model = m.label;
  rule.wonder = true;
  Local loc = derive_local(m, level, q);
  if (loc.unencoded) rule.unencoded = loc.unencoded;
  else if (loc.structural) rule.structural = loc.structural;
  else if (level == 36) rule.unencoded = "no encoded rule at 2 for a level 36q fixed class";
  else rule.branches.push_back({"any", loc.terms});
  return rule;
}

ConstraintRule fixed_class_rule(const CurveInstance& ci, i128 q) {
  ConstraintRule rule;
  rule.instance = ci.label;
  rule.wonder = ci.wonder;
  if (q == 5 && ci.wonder) {
    // level 90 and 360 wonder classes at q = 5
    auto fixed = [&](std::vector<i128> ks) {
      std::vector<ChainTerm> chain{{1, true, "q"}};
      chain.push_back({ks[0], false, "2"});
      chain.push_back({ks[1], false, "3"});
      rule.branches.push_back({"any", chain});
    };
    if (ci.label == "90c") fixed({-1, -2});
    else if (ci.label == "360a") fixed({2, -3});
    else if (ci.label == "360d") fixed({1, -6});
    if (!rule.branches.empty()) {
      rule.model = ci.label + " (fixed rule)";
      return rule;
    }
  }
  if (!ci.wonder) {
    auto curves = embedded_fixed_classes().in_class(ci.label);
    if (curves.empty()) {
      rule.unencoded = "class " + ci.label + " missing from the fixed-class dataset";
      return rule;
    }
    rule.model = curves.front()->label;
    kill_by_trace(rule, curves.front()->model);
    return rule;
  }
  return derived_fixed_class_rule(ci.label, q);
}

ConstraintRule family_rule(const CurveInstance& ci, i128 q) {
  ConstraintRule rule;
  rule.instance = ci.label;
  rule.rep = ci.rep;
  rule.wonder = ci.wonder;
  const Representation& r = *ci.rep;
  std::string letter = ci.label.substr(ci.label.rfind('.') + 1);
  std::string which = letter + instance_curve_index(r.family, letter);
  CurveModel m = instantiate_family_curve(r, which);
  rule.model = m.label;
  if (!ci.wonder) {
    kill_by_trace(rule, m);
    return rule;
  }
  Local loc = derive_local(m, ci.level, q);
  if (loc.unencoded) {
    rule.unencoded = loc.unencoded;
  } else if (loc.structural) {
    rule.structural = loc.structural;
  } else if (ci.level == 36) {
    std::string why;
    auto br = branches_36q(r, letter, q, loc.terms.front(), *loc.at3, why);
    if (br) rule.branches = *br;
    else rule.unencoded = why;
  } else {
    rule.branches.push_back({"any", loc.terms});
  }
  return rule;
}

}  // namespace

std::optional<TraceBound> trace_obstruction_bound(const CurveModel& m, std::int64_t ell_max) {
  Invariants inv = weierstrass_invariants(m);
  for (std::int64_t ell = 7; ell <= ell_max; ell += 6) {
    if (!is_prime(ell) || inv.disc % ell == 0) continue;
    i128 a = trace_of_frobenius(m, ell);
    if (mod(a - (ell + 1), 4) == 0) continue;
    TraceBound tb;
    tb.ell = ell;
    tb.a_ell = a;
    std::set<i128> ps;
    auto add_primes = [&](i128 n) {
      for (auto& [p, e] : factor(abs128(n)).factors) ps.insert(p);
    };
    auto hasse = static_cast<i128>(std::floor(2 * std::sqrt(static_cast<double>(ell))));
    for (i128 t = -hasse; t <= hasse; ++t)
      if (mod(t - (ell + 1), 4) == 0) add_primes(a - t);
    add_primes(a + ell + 1);
    add_primes(a - ell - 1);
    tb.exceptional_primes.assign(ps.begin(), ps.end());
    tb.p_bound = ps.empty() ? 0 : *ps.rbegin();
    return tb;
  }
  return std::nullopt;
}

ConstraintRule derived_fixed_class_rule(std::string_view class_label, i128 q) {
  const FixedClassInfo* info = nullptr;
  for (auto& fc : fixed_class_table())
    if (fc.label == class_label && fc.q == q) info = &fc;
  if (!info) throw error(errc::invalid_argument, std::string(class_label) + " is not a fixed class for q = " + to_string(q));
  if (!info->wonder) throw error(errc::invalid_argument, info->label + " has no square-class discriminant");
  ConstraintRule rule;
  rule.instance = info->label;
  rule.wonder = true;
  auto curves = embedded_fixed_classes().in_class(class_label);
  if (curves.empty()) {
    rule.unencoded = "class " + info->label + " missing from the fixed-class dataset";
    return rule;
  }
  // prefer the curve with v_q(Delta) = 2, then any curve the recipes cover
  std::vector<const FixedCurve*> order;
  for (auto* c : curves)
    if (valuation(weierstrass_invariants(c->model).disc, q) == 2) order.push_back(c);
  for (auto* c : curves)
    if (std::find(order.begin(), order.end(), c) == order.end()) order.push_back(c);
  std::optional<ConstraintRule> first;
  for (auto* c : order) {
    ConstraintRule r = rule_from_model(info->label, c->model, info->conductor / static_cast<int>(q), q);
    if (r.encoded()) return r;
    if (!first) first = r;
  }
  return *first;
}

std::vector<ConstraintRule> constraint_rules(const ClassificationRecord& rec, const Alpha& alpha, bool strict) {
  if (alpha.value && *alpha.value < 1) throw error(errc::invalid_argument, "alpha must be positive");
  std::vector<ConstraintRule> rules;
  for (auto& ci : rec.curve_instances) {
    ConstraintRule r = ci.rep ? family_rule(ci, rec.q) : fixed_class_rule(ci, rec.q);
    if (strict && r.unencoded) throw error(errc::unencoded_case, r.instance + ": " + *r.unencoded);
    apply_alpha(r.branches, alpha);
    rules.push_back(std::move(r));
  }
  return rules;
}

namespace {

int chi(const ChainTerm& t, std::int64_t r, const Alpha& alpha) {
  int v = character_at(t.kappa, r);
  return t.times_alpha ? v * alpha.anchor : v;
}

bool branch_violated(const RuleBranch& b, std::int64_t r, const Alpha& alpha) {
  if (b.chain.empty()) return false;
  int first = chi(b.chain.front(), r, alpha);
  for (auto& t : b.chain)
    if (chi(t, r, alpha) != first) return true;
  return false;
}

std::string chain_values(const RuleBranch& b, std::int64_t r, const Alpha& alpha) {
  std::string s;
  for (std::size_t i = 0; i < b.chain.size(); ++i) s += (i ? "," : "") + std::string(chi(b.chain[i], r, alpha) > 0 ? "+" : "-");
  return s;
}

}  // namespace

ExclusionReport excluded_exponents(i128 q, const Alpha& alpha, const SearchBounds& bounds) {
  return excluded_exponents(classify_prime(q, bounds), alpha);
}

ExclusionReport excluded_exponents(const ClassificationRecord& rec, const Alpha& alpha) {
  ExclusionReport rep;
  rep.q = rec.q;
  rep.alpha = alpha;
  rep.caveats = rec.caveats;
  rep.rules = constraint_rules(rec, alpha, false);

  std::set<i128> odd;
  for (auto& r : rep.rules) {
    if (!r.encoded()) rep.incomplete = true;
    if (!r.encoded() || r.structural) continue;
    for (auto& b : r.branches)
      for (auto& t : b.chain)
        for (i128 p : odd_prime_divisors(t.kappa)) odd.insert(p);
  }
  i128 M = 8;
  for (i128 p : odd) M = checked_mul(M, p);
  if (M > (i128(1) << 31)) throw error(errc::overflow, "sieve modulus " + to_string(M) + " too large");
  rep.modulus = static_cast<std::int64_t>(M);

  std::vector<std::int64_t> excl, prov;
  for (std::int64_t r = 1; r < rep.modulus; ++r) {
    if (std::gcd(r, rep.modulus) != 1) continue;
    ++rep.units;
    ResidueAudit audit;
    audit.residue = r;
    bool all_killed = true, encoded_killed = true;
    for (auto& rule : rep.rules) {
      if (!rule.encoded()) {
        all_killed = false;
        audit.notes.push_back(rule.instance + ": unencoded");
        continue;
      }
      if (rule.structural) {
        audit.notes.push_back(rule.instance + ": killed, " + *rule.structural);
        continue;
      }
      std::string alive;
      for (auto& b : rule.branches)
        if (!branch_violated(b, r, alpha)) {
          alive = b.condition;
          break;
        }
      if (alive.empty()) {
        std::string vals;
        for (auto& b : rule.branches) vals += (vals.empty() ? "" : " | ") + chain_values(b, r, alpha);
        audit.notes.push_back(rule.instance + ": killed, characters " + vals);
      } else {
        all_killed = encoded_killed = false;
        audit.notes.push_back(rule.instance + ": survives (" + alive + ")");
      }
    }
    if (encoded_killed) prov.push_back(r);
    if (all_killed && !rep.incomplete) excl.push_back(r);
    audit.excluded = all_killed && !rep.incomplete;
    rep.audit.push_back(std::move(audit));
  }
  rep.excluded = ResidueClassSet(rep.modulus, excl);
  rep.provisional_excluded = ResidueClassSet(rep.modulus, prov);
  rep.density = rep.incomplete || rep.units == 0 ? 0.0 : static_cast<double>(excl.size()) / rep.units;
  for (auto& r : rep.rules)
    if (r.unencoded) rep.caveats.push_back("unencoded instance " + r.instance + ": " + *r.unencoded);
  return rep;
}

std::int64_t smallest_cookie_prime(i128 q, int ell0, int delta, std::int64_t cap) {
  if (q < 5) throw error(errc::invalid_argument, "q must be >= 5");
  if (ell0 != 1 && ell0 != 7 && ell0 != 13 && ell0 != 19)
    throw error(errc::invalid_argument, "l0 must be one of 1, 7, 13, 19");
  if (delta != 0 && delta != 1) throw error(errc::invalid_argument, "delta must be 0 or 1");
  int want = delta ? -1 : 1;
  for (std::int64_t ell = ell0; ell <= cap; ell += 24) {
    if (ell == q || !is_prime(ell)) continue;
    if (jacobi_symbol(q, ell) == want) return ell;
  }
  throw error(errc::not_found, "no prime below the cap " + std::to_string(cap));
}

}  // namespace tcl
