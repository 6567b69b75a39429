#include "tcl/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tcl/arith.hpp"
#include "tcl/curves.hpp"
#include "tcl/fixed_classes.hpp"

namespace tcl {

i128 Representation::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end())
    throw error(errc::invalid_argument, family + " representation has no parameter '" + key + "'");
  return it->second;
}

std::string Representation::to_string() const {
  std::string s = family + "{";
  bool first = true;
  for (auto& [k, v] : params) {
    if (!first) s += ",";
    first = false;
    s += k + ":" + tcl::to_string(v);
  }
  return s + "}";
}

std::string SearchBounds::to_string() const {
  std::ostringstream os;
  os << "a_max=" << a_max << " b_max=" << b_max << " d_max=" << (d_max ? tcl::to_string(d_max) : "auto")
     << " n={";
  for (std::size_t i = 0; i < n_values.size(); ++i) os << (i ? "," : "") << n_values[i];
  os << "}";
  return os.str();
}

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids = {
      "S1",    "S2",    "S3",    "S4",    "S5",    "S6",    "S7",    "S8",
      "18q.1", "18q.2", "18q.3", "18q.4", "18q.5", "18q.6",
      "36q.1", "36q.2", "36q.3", "36q.4", "36q.5", "36q.6", "36q.7",
      "72q.1", "72q.2", "72q.3", "72q.4", "72q.5", "72q.6", "72q.7", "72q.8", "72q.9",
      "72q.10", "72q.11", "72q.12"};
  return ids;
}

bool is_set_family(std::string_view id) { return id.size() == 2 && id[0] == 'S'; }

int family_level(std::string_view id) {
  if (id.rfind("18q.", 0) == 0) return 18;
  if (id.rfind("36q.", 0) == 0) return 36;
  if (id.rfind("72q.", 0) == 0) return 72;
  return 0;
}

std::vector<std::string> family_classes(std::string_view f) {
  if (f == "18q.5" || f == "36q.1" || f == "36q.2" || f == "36q.6" || f == "72q.4" || f == "72q.5" ||
      f == "72q.6")
    return {"a", "b"};
  return {"a"};
}

namespace {

i128 p2(int a) { return checked_pow(2, static_cast<unsigned>(a)); }
i128 p3(int b) { return checked_pow(3, static_cast<unsigned>(b)); }
i128 sgn(i128 e) { return (e & 1) ? -1 : 1; }

// x = base^k with k >= 0
std::optional<int> exact_log(i128 x, int base) {
  if (x < 1) return std::nullopt;
  int k = 0;
  while (x % base == 0) {
    x /= base;
    ++k;
  }
  if (x != 1) return std::nullopt;
  return k;
}

std::optional<std::pair<int, int>> split23(i128 n) {
  if (n <= 0) return std::nullopt;
  int a = 0, b = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++a;
  }
  while (n % 3 == 0) {
    n /= 3;
    ++b;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(a, b);
}

bool s_exponent_ok(int a) { return a == 2 || a == 3 || a >= 5; }
bool s4_exponent_ok(int a) { return a == 2 || a == 4 || (a >= 8 && a % 2 == 0); }

int least_prime_factor(int n) {
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

std::string check(bool ok, const char* clause) { return ok ? std::string() : std::string(clause); }

using Params = std::map<std::string, i128>;

struct Ctx {
  i128 q;
  const SearchBounds& bounds;
  std::string family;
  std::vector<Representation>& out;

  void add(Params p) {
    if (bounds.d_max > 0 && p.count("d") && abs128(p["d"]) > bounds.d_max) return;
    out.push_back({family, std::move(p)});
  }

  // every 2^a 3^b (a in [amin,amax], b in [0,b_max]) below the 128-bit range
  template <class F>
  void each_ab(int amin, int amax, F&& f) const {
    amax = std::min(amax, bounds.a_max);
    for (int a = amin; a <= amax; ++a) {
      auto pa = try_pow(2, static_cast<unsigned>(a));
      if (!pa || *pa > (i128_max >> 2)) break;
      i128 N = *pa;
      for (int b = 0; b <= bounds.b_max; ++b) {
        f(a, b, N);
        auto next = try_mul(N, 3);
        if (!next || *next > (i128_max >> 2)) break;
        N = *next;
      }
    }
  }

  template <class F>
  void each_b(int bmin, F&& f) const {
    for (int b = bmin; b <= bounds.b_max; ++b) {
      auto pb = try_pow(3, static_cast<unsigned>(b));
      if (!pb || *pb > (i128_max >> 3)) break;
      f(b, *pb);
    }
  }

  template <class F>
  void each_a(int amin, F&& f) const {
    for (int a = amin; a <= bounds.a_max; ++a) {
      auto pa = try_pow(2, static_cast<unsigned>(a));
      if (!pa || *pa > (i128_max >> 3)) break;
      f(a, *pa);
    }
  }
};

// odd square root normalised to 1 mod 4
std::optional<i128> odd_root_1mod4(i128 x) {
  if (x <= 0) return std::nullopt;
  auto r = exact_sqrt(x);
  if (!r || (*r & 1) == 0) return std::nullopt;
  return (*r % 4 == 1) ? *r : -*r;
}

std::optional<i128> pos_root(i128 x) {
  if (x <= 0) return std::nullopt;
  return exact_sqrt(x);
}

std::optional<i128> safe(i128 a, i128 b, char op) {
  i128 r;
  bool o = op == '+' ? __builtin_add_overflow(a, b, &r)
                     : op == '-' ? __builtin_sub_overflow(a, b, &r) : __builtin_mul_overflow(a, b, &r);
  if (o) return std::nullopt;
  return r;
}

void search_S(Ctx& c, int which) {
  i128 q = c.q;
  switch (which) {
    case 1:
      for (int dl = 0; dl < 2; ++dl) {
        auto ab = split23(q - sgn(dl));
        if (ab && s_exponent_ok(ab->first) && ab->first <= c.bounds.a_max && ab->second <= c.bounds.b_max)
          c.add({{"a", ab->first}, {"b", ab->second}, {"delta", dl}});
      }
      break;
    case 2:
      c.each_a(2, [&](int a, i128 pa) {
        if (!s_exponent_ok(a)) return;
        for (int d1 = 0; d1 < 2; ++d1) {
          i128 t = q - sgn(d1) * pa;
          int d2 = t < 0 ? 1 : 0;
          auto b = exact_log(abs128(t), 3);
          if (b && *b >= 1 && *b <= c.bounds.b_max && !(d1 && d2))
            c.add({{"a", a}, {"b", *b}, {"delta1", d1}, {"delta2", d2}});
        }
      });
      break;
    case 3: {
      auto a = exact_log(3 * q - 1, 2);
      if (a && *a >= 5 && *a % 2 == 1) c.add({{"a", *a}});
      break;
    }
    case 4:
      c.each_ab(2, c.bounds.a_max, [&](int a, int b, i128 N) {
        if (!s4_exponent_ok(a) || b % 2 == 0 || N >= q) return;
        if (auto d = pos_root(q - N)) c.add({{"a", a}, {"b", b}, {"d", *d}});
      });
      break;
    case 5:
      c.each_a(2, [&](int a, i128 pa) {
        if (!s4_exponent_ok(a) || pa >= q) return;
        i128 x = q - pa;
        if (x % 3 == 0)
          if (auto d = pos_root(x / 3)) c.add({{"a", a}, {"d", *d}});
      });
      break;
    case 6:
      c.each_b(1, [&](int b, i128 pb) {
        if (b % 2 == 0 || pb >= 4 * q) return;
        auto d = pos_root(4 * q - pb);
        if (d && (*d & 1)) c.add({{"b", b}, {"d", *d}});
      });
      break;
    case 7:
      if ((4 * q - 1) % 3 == 0) {
        auto d = pos_root((4 * q - 1) / 3);
        if (d && (*d & 1)) c.add({{"d", *d}});
      }
      break;
    case 8:
      if ((2 * q + 1) % 3 == 0) {
        auto v = pos_root((2 * q + 1) / 3);
        auto u = pos_root(2 * q - 1);
        if (u && v) c.add({{"u", *u}, {"v", *v}});
      }
      break;
  }
}

// theorem families, with Q = q (or q^n for the q^n rows)
void search_theorem(Ctx& c, std::string_view f) {
  const i128 q = c.q;
  if (f == "18q.1" || f == "72q.2") {
    for (int dl = 0; dl < 2; ++dl) {
      auto ab = split23(q - sgn(dl));
      if (!ab || ab->first > c.bounds.a_max || ab->second > c.bounds.b_max) continue;
      int a = ab->first;
      if ((f == "18q.1" && a >= 5) || (f == "72q.2" && (a == 2 || a == 3)))
        c.add({{"a", a}, {"b", ab->second}, {"delta", dl}});
    }
  } else if (f == "18q.2") {
    auto a = exact_log(3 * q - 1, 2);
    if (a && *a >= 5 && *a % 2 == 1 && *a <= c.bounds.a_max) c.add({{"a", *a}});
  } else if (f == "18q.3") {
    c.each_a(5, [&](int a, i128 pa) {
      for (int d1 = 0; d1 < 2; ++d1) {
        i128 t = q - sgn(d1) * pa;
        int d2 = t < 0 ? 1 : 0;
        auto b = exact_log(abs128(t), 3);
        if (b && *b >= 1 && *b <= c.bounds.b_max)
          c.add({{"a", a}, {"b", *b}, {"delta1", d1}, {"delta2", d2}});
      }
    });
  } else if (f == "72q.3") {
    for (int a : {2, 3})
      for (int dl = 0; dl < 2; ++dl) {
        auto b = exact_log(q - sgn(dl) * p2(a), 3);
        if (b && *b <= c.bounds.b_max) c.add({{"a", a}, {"b", *b}, {"delta", dl}});
      }
  } else if (f == "18q.4" || f == "72q.9") {
    bool big = f == "18q.4";
    c.each_ab(big ? 7 : 4, big ? c.bounds.a_max : 5, [&](int a, int b, i128 N) {
      for (auto [d1, d2] : {std::pair{0, 0}, {0, 1}, {1, 0}}) {
        if (big && a % 2 == 0 && b % 2 == 0 && (d1 || d2)) continue;
        if (!big && a == 4 && d1 != d2 && b % 2 == 0) continue;
        auto t = safe(q, sgn(d2) * N, '-');
        if (!t) continue;
        if (auto d = odd_root_1mod4(sgn(d1) * *t))
          c.add({{"a", a}, {"b", b}, {"d", *d}, {"delta1", d1}, {"delta2", d2}});
      }
    });
  } else if (f == "18q.5") {
    c.each_a(7, [&](int a, i128 pa) {
      for (auto [d1, d2] : {std::pair{0, 0}, {0, 1}, {1, 0}}) {
        i128 x = sgn(d1) * (q - sgn(d2) * pa);
        if (x <= 0 || x % 3) continue;
        if (auto d = odd_root_1mod4(x / 3))
          c.add({{"a", a}, {"d", *d}, {"delta1", d1}, {"delta2", d2}});
      }
    });
  } else if (f == "18q.6") {
    c.each_b(1, [&](int b, i128 pb) {
      auto qb = safe(q, pb, '*');
      if (!qb) return;
      c.each_a(7, [&](int a, i128 pa) {
        if (a % 2 == 0 || pa >= *qb) return;
        if (auto d = odd_root_1mod4(*qb - pa)) c.add({{"a", a}, {"b", b}, {"d", *d}});
      });
    });
  } else if (f == "36q.1") {
    if ((2 * q + 1) % 3 == 0) {
      auto v = pos_root((2 * q + 1) / 3);
      auto u = pos_root(2 * q - 1);
      if (u && v && (*u & 1) && (*v & 1))
        c.add({{"u", *u % 4 == 1 ? *u : -*u}, {"v", *v % 4 == 1 ? *v : -*v}});
    }
  } else if (f == "36q.2" || f == "72q.6") {
    if ((4 * q - 1) % 3 == 0) {
      auto d = pos_root((4 * q - 1) / 3);
      if (d && (*d & 1)) {
        int r = static_cast<int>(*d % 8);
        if (f == "36q.2" && (r == 1 || r == 7)) c.add({{"d", r == 1 ? *d : -*d}});
        if (f == "72q.6" && (r == 3 || r == 5)) c.add({{"d", r == 5 ? *d : -*d}});
      }
    }
  } else if (f == "36q.3" || f == "72q.7") {
    if ((f == "36q.3") != (q % 4 == 3)) return;
    c.each_b(1, [&](int b, i128 pb) {
      if (b % 2 == 0) return;
      auto t = safe(4 * q, pb, '-');
      if (!t) return;
      if (auto d = odd_root_1mod4(*t)) c.add({{"b", b}, {"d", *d}});
    });
  } else if (f == "36q.4") {
    c.each_b(1, [&](int b, i128 pb) {
      if (b % 2 == 0) return;
      for (int dl = 0; dl < 2; ++dl) {
        auto t = dl == 0 ? safe(q, 4 * pb, '+') : safe(4 * pb, q, '-');
        if (t)
          if (auto d = odd_root_1mod4(*t)) c.add({{"b", b}, {"d", *d}, {"delta", dl}});
      }
    });
  } else if (f == "36q.6") {
    if ((q + 4) % 3 == 0)
      if (auto d = odd_root_1mod4((q + 4) / 3)) c.add({{"d", *d}});
  } else if (f == "36q.7" || f == "72q.8") {
    bool even = f == "36q.7";
    c.each_b(0, [&](int b, i128 pb) {
      if ((b % 2 == 0) != even) return;
      auto t = safe(q, 4 * pb, '-');
      if (t)
        if (auto d = odd_root_1mod4(*t)) c.add({{"b", b}, {"d", *d}});
    });
  } else if (f == "72q.1") {
    auto b = exact_log(4 * q - 1, 3);
    if (b && *b % 2 == 1 && *b <= c.bounds.b_max) c.add({{"b", *b}});
  } else if (f == "72q.4") {
    if ((q - 4) % 3 == 0)
      if (auto d = odd_root_1mod4((q - 4) / 3)) c.add({{"d", *d}});
  } else if (f == "72q.5") {
    for (int a : {4, 5})
      for (int dl = 0; dl < 2; ++dl) {
        i128 x = q - sgn(dl) * p2(a);
        if (x > 0 && x % 3 == 0)
          if (auto d = odd_root_1mod4(x / 3)) c.add({{"a", a}, {"d", *d}, {"delta", dl}});
      }
  } else if (f == "72q.11") {
    c.each_b(0, [&](int b, i128 pb) {
      auto t = safe(q, pb, '*');
      if (t)
        if (auto d = odd_root_1mod4(*t - 32)) c.add({{"b", b}, {"d", *d}});
    });
  } else if (f == "36q.5" || f == "72q.10" || f == "72q.12") {
    for (int n : c.bounds.n_values) {
      if (n < 7 || least_prime_factor(n) < 7)
        throw error(errc::invalid_argument, "q^n search needs n with least prime factor >= 7");
      auto Q = try_pow(q, static_cast<unsigned>(n));
      if (!Q || *Q > (i128_max >> 4)) continue;
      if (f == "36q.5") {
        c.each_b(1, [&](int b, i128 pb) {
          if (b % 2 == 0) return;
          for (int dl = 0; dl < 2; ++dl) {
            auto t = dl == 0 ? safe(*Q, 4 * pb, '+') : safe(4 * pb, *Q, '-');
            if (t)
              if (auto d = odd_root_1mod4(*t))
                c.add({{"b", b}, {"d", *d}, {"delta", dl}, {"n", n}});
          }
        });
      } else if (f == "72q.10") {
        c.each_ab(4, 5, [&](int a, int b, i128 N) {
          if (a == 4 && b % 2 == 0) return;
          for (int dl = 0; dl < 2; ++dl) {
            auto t = dl == 0 ? safe(*Q, N, '+') : safe(N, *Q, '-');
            if (t)
              if (auto d = odd_root_1mod4(*t))
                c.add({{"a", a}, {"b", b}, {"d", *d}, {"delta", dl}, {"n", n}});
          }
        });
      } else {
        c.each_b(0, [&](int b, i128 pb) {
          auto t = safe(*Q, pb, '*');
          if (t)
            if (auto d = odd_root_1mod4(*t - 32)) c.add({{"b", b}, {"d", *d}, {"n", n}});
        });
      }
    }
  } else {
    throw error(errc::invalid_argument, "unknown family id '" + std::string(f) + "'");
  }
}

}  // namespace

i128 family_value(const Representation& r) {
  const std::string& f = r.family;
  auto P = [&](const char* k) { return r.get(k); };
  auto I = [&](const char* k) { return r.geti(k); };
  if (f == "S1" || f == "18q.1" || f == "72q.2") return checked_add(checked_mul(p2(I("a")), p3(I("b"))), sgn(P("delta")));
  if (f == "S2" || f == "18q.3") return sgn(P("delta1")) * p2(I("a")) + sgn(P("delta2")) * p3(I("b"));
  if (f == "S3" || f == "18q.2") return (p2(I("a")) + 1) / 3;
  if (f == "S4") return checked_add(checked_mul(P("d"), P("d")), checked_mul(p2(I("a")), p3(I("b"))));
  if (f == "S5") return checked_add(3 * checked_mul(P("d"), P("d")), p2(I("a")));
  if (f == "S6" || f == "36q.3" || f == "72q.7") return (checked_mul(P("d"), P("d")) + p3(I("b"))) / 4;
  if (f == "S7" || f == "36q.2" || f == "72q.6") return (3 * checked_mul(P("d"), P("d")) + 1) / 4;
  if (f == "S8" || f == "36q.1") return (3 * checked_mul(P("v"), P("v")) - 1) / 2;
  if (f == "18q.4" || f == "72q.9")
    return sgn(P("delta1")) * checked_mul(P("d"), P("d")) +
           sgn(P("delta2")) * checked_mul(p2(I("a")), p3(I("b")));
  if (f == "18q.5") return sgn(P("delta1")) * 3 * checked_mul(P("d"), P("d")) + sgn(P("delta2")) * p2(I("a"));
  if (f == "18q.6") return (checked_mul(P("d"), P("d")) + p2(I("a"))) / p3(I("b"));
  if (f == "36q.4" || f == "36q.5") return sgn(P("delta")) * (checked_mul(P("d"), P("d")) - 4 * p3(I("b")));
  if (f == "36q.6") return 3 * checked_mul(P("d"), P("d")) - 4;
  if (f == "36q.7" || f == "72q.8") return checked_mul(P("d"), P("d")) + 4 * p3(I("b"));
  if (f == "72q.1") return (p3(I("b")) + 1) / 4;
  if (f == "72q.3") return p3(I("b")) + sgn(P("delta")) * p2(I("a"));
  if (f == "72q.4") return 3 * checked_mul(P("d"), P("d")) + 4;
  if (f == "72q.5") return 3 * checked_mul(P("d"), P("d")) + sgn(P("delta")) * p2(I("a"));
  if (f == "72q.10")
    return sgn(P("delta")) * (checked_mul(P("d"), P("d")) - checked_mul(p2(I("a")), p3(I("b"))));
  if (f == "72q.11" || f == "72q.12") return (checked_mul(P("d"), P("d")) + 32) / p3(I("b"));
  throw error(errc::invalid_argument, "unknown family id '" + f + "'");
}

std::string side_condition_violation(const Representation& r) {
  const std::string& f = r.family;
  auto has = [&](const char* k) { return r.has(k); };
  auto I = [&](const char* k) { return r.geti(k); };
  auto D = [&](const char* k) { return r.get(k); };
  for (auto& [k, v] : r.params) {
    if ((k == "a" || k == "b" || k == "n") && v < 0) return k + " >= 0";
    if (k.rfind("delta", 0) == 0 && v != 0 && v != 1) return k + " in {0,1}";
  }
  std::string e;
  auto need = [&](bool ok, const char* clause) {
    if (e.empty() && !ok) e = clause;
  };
  auto d1mod4 = [&] { need(mod(D("d"), 4) == 1, "d = 1 mod 4"); };
  auto dd_ok = [&] { need(!(I("delta1") == 1 && I("delta2") == 1), "(delta1,delta2) != (1,1)"); };
  if (f == "S1") need(s_exponent_ok(I("a")), "a in {2,3} or a >= 5");
  else if (f == "S2") { need(s_exponent_ok(I("a")), "a in {2,3} or a >= 5"); need(I("b") >= 1, "b >= 1"); dd_ok(); }
  else if (f == "S3" || f == "18q.2") { need(I("a") >= 5 && I("a") % 2 == 1, "a >= 5 odd"); }
  else if (f == "S4") { need(s4_exponent_ok(I("a")), "a in {2,4} or a >= 8 even"); need(I("b") % 2 == 1, "b odd"); need(D("d") > 0, "d > 0"); }
  else if (f == "S5") { need(s4_exponent_ok(I("a")), "a in {2,4} or a >= 8 even"); need(D("d") > 0, "d > 0"); }
  else if (f == "S6") { need(I("b") % 2 == 1, "b odd"); need(D("d") > 0 && D("d") % 2 == 1, "d odd positive"); }
  else if (f == "S7") { need(D("d") > 0 && D("d") % 2 == 1, "d odd positive"); }
  else if (f == "S8") { need(D("u") > 0 && D("v") > 0, "u, v > 0"); need(D("u") * D("u") - 3 * D("v") * D("v") == -2, "u^2 - 3v^2 = -2"); }
  else if (f == "18q.1") need(I("a") >= 5, "a >= 5");
  else if (f == "18q.3") { need(I("a") >= 5, "a >= 5"); need(I("b") >= 1, "b >= 1"); dd_ok(); }
  else if (f == "18q.4") {
    need(I("a") >= 7, "a >= 7"); dd_ok(); d1mod4();
    need(!(I("a") % 2 == 0 && I("b") % 2 == 0 && (I("delta1") || I("delta2"))), "a, b even => (delta1,delta2) = (0,0)");
  }
  else if (f == "18q.5") { need(I("a") >= 7, "a >= 7"); dd_ok(); d1mod4(); }
  else if (f == "18q.6") { need(I("a") >= 7 && I("a") % 2 == 1, "a >= 7 odd"); need(I("b") >= 1, "b >= 1"); d1mod4(); }
  else if (f == "36q.1") { need(mod(D("u"), 4) == 1 && mod(D("v"), 4) == 1, "u = v = 1 mod 4"); need(D("u") * D("u") - 3 * D("v") * D("v") == -2, "u^2 - 3v^2 = -2"); }
  else if (f == "36q.2") need(mod(D("d"), 8) == 1, "d = 1 mod 8");
  else if (f == "72q.6") need(mod(D("d"), 8) == 5, "d = 5 mod 8");
  else if (f == "36q.3" || f == "72q.7") {
    need(I("b") >= 1 && I("b") % 2 == 1, "b >= 1 odd"); d1mod4();
    if (e.empty()) {
      i128 q = family_value(r);
      need(f == "36q.3" ? mod(q, 4) == 3 : mod(q, 4) == 1, f == "36q.3" ? "q = 3 mod 4" : "q = 1 mod 4");
    }
  }
  else if (f == "36q.4") { need(I("b") >= 1 && I("b") % 2 == 1, "b >= 1 odd"); d1mod4(); }
  else if (f == "36q.5") { need(I("b") >= 1 && I("b") % 2 == 1, "b >= 1 odd"); d1mod4(); need(I("n") >= 7 && least_prime_factor(I("n")) >= 7, "least prime factor of n >= 7"); }
  else if (f == "36q.6" || f == "72q.4") d1mod4();
  else if (f == "36q.7") { need(I("b") % 2 == 0, "b even"); d1mod4(); }
  else if (f == "72q.8") { need(I("b") % 2 == 1, "b odd"); d1mod4(); }
  else if (f == "72q.1") need(I("b") % 2 == 1, "b odd");
  else if (f == "72q.2" || f == "72q.3") need(I("a") == 2 || I("a") == 3, "a in {2,3}");
  else if (f == "72q.5") { need(I("a") == 4 || I("a") == 5, "a in {4,5}"); d1mod4(); }
  else if (f == "72q.9") {
    need(I("a") == 4 || I("a") == 5, "a in {4,5}"); dd_ok(); d1mod4();
    need(!(I("a") == 4 && I("delta1") != I("delta2") && I("b") % 2 == 0), "b odd if a = 4 and delta1 != delta2");
  }
  else if (f == "72q.10") {
    need(I("a") == 4 || I("a") == 5, "a in {4,5}"); d1mod4();
    need(!(I("a") == 4 && I("b") % 2 == 0), "b odd if a = 4");
    need(I("n") >= 7 && least_prime_factor(I("n")) >= 7, "least prime factor of n >= 7");
  }
  else if (f == "72q.11") d1mod4();
  else if (f == "72q.12") { d1mod4(); need(I("n") >= 7 && least_prime_factor(I("n")) >= 7, "least prime factor of n >= 7"); }
  else throw error(errc::invalid_argument, "unknown family id '" + f + "'");
  (void)has;
  if (e.empty()) {
    // exactness of the divisions in the defining formula
    if (f == "S3" || f == "18q.2") need((p2(I("a")) + 1) % 3 == 0, "3 | 2^a + 1");
    if (f == "S6" || f == "36q.3" || f == "72q.7") need((D("d") * D("d") + p3(I("b"))) % 4 == 0, "4 | d^2 + 3^b");
    if (f == "S7" || f == "36q.2" || f == "72q.6") need((3 * D("d") * D("d") + 1) % 4 == 0, "d odd");
    if (f == "72q.1") need((p3(I("b")) + 1) % 4 == 0, "4 | 3^b + 1");
    if (f == "18q.6") need((D("d") * D("d") + p2(I("a"))) % p3(I("b")) == 0, "3^b | d^2 + 2^a");
    if (f == "72q.11" || f == "72q.12") need((D("d") * D("d") + 32) % p3(I("b")) == 0, "3^b | d^2 + 32");
  }
  return e;
}

std::vector<Representation> search_family(i128 q, std::string_view family, const SearchBounds& bounds) {
  if (q < 5) throw error(errc::invalid_argument, "q must be at least 5");
  std::vector<Representation> out;
  Ctx c{q, bounds, std::string(family), out};
  if (is_set_family(family)) {
    int which = family[1] - '0';
    if (which < 1 || which > 8) throw error(errc::invalid_argument, "unknown family id '" + std::string(family) + "'");
    search_S(c, which);
  } else {
    search_theorem(c, family);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (auto& r : out) {
    std::string bad = side_condition_violation(r);
    if (!bad.empty())
      throw error(errc::normalization_bug, "search produced " + r.to_string() + " violating " + bad);
    i128 target = r.has("n") ? checked_pow(q, static_cast<unsigned>(r.get("n"))) : q;
    if (family_value(r) != target)
      throw error(errc::normalization_bug, "search produced " + r.to_string() + " not matching q");
  }
  return out;
}

const std::vector<FixedClassInfo>& fixed_class_table() {
  static const std::vector<FixedClassInfo> t = {
      {"90a", 90, 5, false, true},        {"90b", 90, 5, false, true},
      {"90c", 90, 5, true, true},         {"126a", 126, 7, false, true},
      {"126b", 126, 7, true, true},       {"198b", 198, 11, false, true},
      {"198c", 198, 11, false, true},     {"198d", 198, 11, false, true},
      {"198e", 198, 11, false, true},     {"306a", 306, 17, false, true},
      {"306b", 306, 17, false, true},     {"306c", 306, 17, true, true},
      {"342b", 342, 19, false, false},    {"342c", 342, 19, false, true},
      {"342f", 342, 19, true, true},      {"414a", 414, 23, false, true},
      {"1314a", 1314, 73, false, true},   {"1314f", 1314, 73, false, true},
      {"180a", 180, 5, false, true},      {"252a", 252, 7, true, true},
      {"468d", 468, 13, false, true},     {"360a", 360, 5, true, true},
      {"360b", 360, 5, false, true},      {"360c", 360, 5, false, true},
      {"360d", 360, 5, true, true},       {"936a", 936, 13, false, true},
      {"936d", 936, 13, true, true},      {"936f", 936, 13, false, true},
      {"2088b", 2088, 29, false, true},   {"2088h", 2088, 29, false, true},
      {"3384a", 3384, 47, false, true},   {"5256e", 5256, 73, true, true},
      {"13896f", 13896, 193, false, true}, {"83016c", 83016, 1153, false, true},
  };
  return t;
}

bool family_instance_is_wonder(const Representation& r) {
  const std::string& f = r.family;
  if (f == "18q.1" || f == "18q.2" || f == "18q.3" || f == "36q.1" || f == "36q.2" || f == "36q.3" ||
      f == "72q.1" || f == "72q.2" || f == "72q.3" || f == "72q.4" || f == "72q.6" || f == "72q.7" ||
      f == "72q.8")
    return true;
  auto I = [&](const char* k) { return r.geti(k); };
  if (f == "18q.4") return I("delta1") == 0 && I("delta2") == 0 && I("a") % 2 == 0 && I("b") % 2 == 1;
  if (f == "18q.5") return I("delta1") == 0 && I("delta2") == 0 && I("a") % 2 == 0;
  if (f == "72q.5") return I("delta") == 0 && I("a") == 4;
  if (f == "72q.9") return I("delta1") == 0 && I("delta2") == 0 && I("a") == 4 && I("b") % 2 == 1;
  return false;
}

namespace {

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids(family_ids().begin() + 8, family_ids().end());
  return ids;
}

bool is_qn_family(std::string_view f) { return f == "36q.5" || f == "72q.10" || f == "72q.12"; }

void require_prime(i128 q) {
  if (q < 5) throw error(errc::invalid_argument, "q must be a prime >= 5, got " + to_string(q));
  if (!is_prime(q)) throw error(errc::invalid_argument, to_string(q) + " is not prime");
}

bool any_rep(i128 q, std::string_view f, const SearchBounds& b) { return !search_family(q, f, b).empty(); }

bool in_T_impl(i128 q, const SearchBounds& b) {
  if (any_rep(q, "S7", b)) return true;
  return q > 16 && (q - 16) % 3 == 0 && exact_sqrt((q - 16) / 3).has_value();
}

}  // namespace

Membership membership(i128 q, const SearchBounds& b) {
  Membership m;
  for (int i = 1; i <= 8 && !m.in_S0; ++i) m.in_S0 = any_rep(q, "S" + std::to_string(i), b);
  bool fixed = false;
  for (auto& fc : fixed_class_table()) {
    if (fc.q != q) continue;
    fixed = true;
    if (fc.wonder) m.in_S0 = true;
  }
  m.in_S = m.in_S0 || fixed;
  for (std::size_t i = 0; i < theorem_ids().size() && !m.in_S; ++i)
    m.in_S = any_rep(q, theorem_ids()[i], b);
  m.in_T = in_T_impl(q, b);
  return m;
}

bool in_set(i128 q, std::string_view id, const SearchBounds& b) {
  if (id == "T") return in_T_impl(q, b);
  if (id == "S0") return membership(q, b).in_S0;
  if (id == "S") return membership(q, b).in_S;
  return any_rep(q, id, b);
}

ClassificationRecord classify_prime(i128 q, const SearchBounds& bounds) {
  require_prime(q);
  ClassificationRecord rec;
  rec.q = q;
  rec.bounds = bounds;
  for (auto& f : family_ids()) {
    auto reps = search_family(q, f, bounds);
    if (is_set_family(f) && !reps.empty()) rec.in_S0 = true;
    if (!is_set_family(f) && !reps.empty()) rec.in_S = true;
    rec.reps.insert(rec.reps.end(), reps.begin(), reps.end());
  }
  for (auto& f : theorem_ids()) {
    if (!is_qn_family(f)) continue;
    std::string note = f + ": bounded search over n in {";
    for (std::size_t i = 0; i < bounds.n_values.size(); ++i) note += (i ? "," : "") + std::to_string(bounds.n_values[i]);
    note += "}, no proof of emptiness";
    std::vector<std::string> skipped;
    for (int n : bounds.n_values) {
      auto Q = try_pow(q, static_cast<unsigned>(n));
      if (!Q || *Q > (i128_max >> 4)) skipped.push_back(std::to_string(n));
    }
    if (!skipped.empty()) {
      note += "; skipped n=";
      for (std::size_t i = 0; i < skipped.size(); ++i) note += (i ? "," : "") + skipped[i];
      note += " (q^n beyond 128 bits)";
    }
    rec.caveats.push_back(note);
  }

  // family instances, folded by the invariants of the representative curve
  std::vector<std::tuple<i128, i128, i128>> seen;
  for (auto& r : rec.reps) {
    if (is_set_family(r.family)) continue;
    for (auto& letter : family_classes(r.family)) {
      CurveInstance ci;
      ci.label = r.family + "." + letter;
      ci.rep = r;
      ci.level = family_level(r.family);
      ci.wonder = family_instance_is_wonder(r);
      CurveModel m = instantiate_family_curve(r, letter + instance_curve_index(r.family, letter));
      Invariants inv = weierstrass_invariants(m);
      std::tuple<i128, i128, i128> key{inv.c4, inv.c6, inv.disc};
      auto it = std::find(seen.begin(), seen.end(), key);
      if (it != seen.end()) {
        auto& prev = rec.curve_instances[static_cast<std::size_t>(it - seen.begin())];
        prev.aliases.push_back(ci.label + " " + r.to_string());
        continue;
      }
      if (auto hit = identify_in_dataset(m)) ci.cremona = *hit;
      seen.push_back(key);
      rec.curve_instances.push_back(std::move(ci));
    }
  }
  for (auto& fc : fixed_class_table()) {
    if (fc.q != q) continue;
    rec.in_S = true;
    if (fc.wonder) rec.in_S0 = true;
    rec.fixed_classes.push_back(fc.label);
    CurveInstance ci;
    ci.label = fc.label;
    ci.level = fc.conductor / fc.q;
    ci.wonder = fc.wonder;
    ci.cremona = fc.label;
    rec.curve_instances.push_back(std::move(ci));
  }
  rec.in_T = in_T_impl(q, bounds);
  return rec;
}

}  // namespace tcl
