#include "tcl/reference.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "tcl/arith.hpp"

#include "tcl/curves.hpp"
#include "wide.hpp"

namespace tcl {

using detail::narrow;
using detail::wide;
using detail::widen;

namespace {

wide P2(int k) {
  if (k < 0) throw error(errc::invalid_argument, "negative power of 2");
  return wide(1) << k;
}

wide P3(int k) {
  if (k < 0) throw error(errc::invalid_argument, "negative power of 3");
  wide r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

wide S(long e) { return (e & 1) ? wide(-1) : wide(1); }

wide quarter(const wide& n) {
  if (n % 4 != 0) throw error(errc::invalid_argument, "closed form is not integral");
  return n / 4;
}

struct CC {
  wide c4, c6;
};

[[noreturn]] void no_row(const Representation& r, std::string_view w) {
  throw error(errc::invalid_argument, "family " + r.family + " has no curve '" + std::string(w) + "'");
}

CC forms18(const Representation& r, std::string_view w, const wide& q) {
  const std::string& f = r.family;
  auto I = [&](const char* k) { return r.has(k) ? r.geti(k) : 0; };
  int a = I("a"), b = I("b"), dl = I("delta"), d1 = I("delta1"), d2 = I("delta2");
  int e = d1 + d2;
  wide d = r.has("d") ? widen(r.get("d")) : wide(0);
  if (f == "18q.1") {
    wide N = P2(a) * P3(b);
    if (w == "a1") return {9 * (N * N + S(dl) * N + 1), S(dl + 1) * 27 * (2 * N + S(dl)) * (N + S(dl + 1)) * (P2(a - 1) * P3(b) + S(dl))};
    if (w == "a2") return {9 * (16 * N * N + S(dl) * 16 * N + 1), 27 * (2 * N + S(dl)) * (32 * N * N + S(dl) * 32 * N - 1)};
    if (w == "a3")
      return {9 * (P2(2 * a - 4) * P3(2 * b) + S(dl) * N + 1),
              S(dl + 1) * 27 * (P2(a - 1) * P3(b) + S(dl)) * (P2(2 * a - 5) * P3(2 * b) + S(dl + 1) * N - 1)};
    if (w == "a4") return {9 * (N * N + S(dl + 1) * 14 * N + 1), S(dl + 1) * 27 * (N + S(dl + 1)) * (N * N + S(dl) * 34 * N + 1)};
  } else if (f == "18q.2") {
    wide A = P2(a);
    if (w == "a1") return {9 * (A * A + A + 1), -27 * (2 * A + 1) * (A - 1) * (P2(a - 1) + 1)};
    if (w == "a2") return {9 * (16 * A * A + 16 * A + 1), -27 * (2 * A + 1) * (32 * A * A + 32 * A - 1)};
    if (w == "a3") return {9 * (P2(2 * a - 4) + A + 1), -27 * (P2(a - 1) + 1) * (P2(2 * a - 5) - A - 1)};
    if (w == "a4") return {9 * (A * A - 14 * A + 1), -27 * (A - 1) * (A * A + 34 * A + 1)};
  } else if (f == "18q.3") {
    int dd = b + d1 + d2 + 1;
    wide A = P2(a), B = P3(b);
    if (w == "a1") return {9 * (A * A + S(e) * A * B + B * B), S(dd) * 27 * (2 * A + S(e) * B) * (A - S(e) * B) * (P2(a - 1) + S(e) * B)};
    if (w == "a2") return {9 * (16 * A * A + S(e) * 16 * A * B + B * B), S(dd) * 27 * (2 * A + S(e) * B) * (32 * A * A + S(e) * 32 * A * B - B * B)};
    if (w == "a3")
      return {9 * (P2(2 * a - 4) + S(e) * A * B + B * B),
              S(b + 1) * 27 * (S(e) * P2(a - 1) + B) * (P2(2 * a - 5) - S(e) * A * B - B * B)};
    if (w == "a4") return {9 * (A * A + S(1 + e) * 14 * A * B + B * B), S(b) * 27 * (B + S(b + dd) * A) * (A * A + S(e) * 34 * A * B + B * B)};
  } else if (f == "18q.4") {
    wide N = P3(b);
    if (w == "a1") return {S(d1) * 9 * (q - S(d2) * P2(a - 2) * N), 27 * d * (d * d + S(e) * P2(a - 3) * 9 * N)};
    if (w == "a2") return {S(d1) * 9 * (q - S(d2) * P2(a + 2) * N), 27 * d * (d * d + S(e) * P2(a) * 9 * N)};
  } else if (f == "18q.5") {
    if (w == "a1") return {9 * (d * d + S(e) * P2(a - 2)), 27 * d * (d * d + S(e) * P2(a - 3) * 3)};
    if (w == "a2") return {9 * (d * d - S(e) * P2(a)), 27 * d * (d * d + S(e) * P2(a) * 3)};
    if (w == "b1") return {81 * (d * d + S(e) * P2(a - 2)), -729 * d * (d * d + S(e) * P2(a - 3) * 3)};
    if (w == "b2") return {81 * (d * d - S(e) * P2(a)), -729 * d * (d * d + S(e) * P2(a) * 3)};
  } else if (f == "18q.6") {
    if (w == "a1") return {9 * (d * d + 3 * P2(a - 2)), 27 * d * (d * d + P2(a - 3) * 9)};
    if (w == "a2") return {9 * (d * d - 3 * P2(a)), 27 * d * (d * d + P2(a) * 9)};
  }
  no_row(r, w);
}

CC forms36(const Representation& r, std::string_view w, const wide& q) {
  const std::string& f = r.family;
  int b = r.has("b") ? r.geti("b") : 0;
  wide d = r.has("d") ? widen(r.get("d")) : wide(0);
  wide dd = d * d;
  if (f == "36q.1") {
    wide uv = widen(r.get("u")) * widen(r.get("v"));
    wide qq = q * q;
    if (w == "a1") return {48 * (qq - 1), -288 * uv * (qq + 2)};
    if (w == "a2") return {48 * (16 * qq - 1), -576 * uv * (32 * qq + 1)};
    if (w == "b1") return {432 * (qq - 1), 7776 * uv * (qq + 2)};
    if (w == "b2") return {432 * (16 * qq - 1), 15552 * uv * (32 * qq + 1)};
  } else if (f == "36q.2") {
    if (w == "a1") return {36 * (dd - 1), -216 * d * (dd + 3)};
    if (w == "a2") return {144 * (4 * dd + 1), -1728 * d * (8 * dd + 3)};
    if (w == "b1") return {324 * (dd - 1), 5832 * d * (dd + 3)};
    if (w == "b2") return {1296 * (4 * dd + 1), 46656 * d * (8 * dd + 3)};
  } else if (f == "36q.3") {
    if (w == "a1") return {36 * (dd - P3(b + 1)), -216 * d * (dd + P3(b + 2))};
    if (w == "a2") return {144 * (4 * dd + P3(b + 1)), -1728 * d * (8 * dd + P3(b + 2))};
  } else if (f == "36q.4" || f == "36q.5") {
    if (w == "a1") return {144 * (dd - P3(b + 1)), 864 * d * (2 * dd - P3(b + 2))};
    if (w == "a2") return {144 * (dd + 4 * P3(b + 1)), 1728 * d * (dd - 4 * P3(b + 2))};
  } else if (f == "36q.6") {
    if (w == "a1") return {144 * (dd - 1), 864 * d * (2 * dd - 3)};
    if (w == "a2") return {144 * (dd + 4), 1728 * d * (dd - 12)};
    if (w == "b1") return {1296 * (dd - 1), -23328 * d * (2 * dd - 3)};
    if (w == "b2") return {1296 * (dd + 4), -46656 * d * (dd - 12)};
  } else if (f == "36q.7") {
    if (w == "a1") return {144 * (dd + P3(b + 1)), 864 * d * (2 * dd + P3(b + 2))};
    if (w == "a2") return {144 * (dd - 4 * P3(b + 1)), 1728 * d * (dd + 4 * P3(b + 2))};
  }
  no_row(r, w);
}

CC forms72(const Representation& r, std::string_view w) {
  const std::string& f = r.family;
  auto I = [&](const char* k) { return r.has(k) ? r.geti(k) : 0; };
  int a = I("a"), b = I("b"), dl = I("delta"), d1 = I("delta1"), d2 = I("delta2");
  int e = d1 + d2;
  wide d = r.has("d") ? widen(r.get("d")) : wide(0);
  wide dd = d * d;
  if (f == "72q.1") {
    wide B = P3(b);
    if (w == "a1") return {144 * (B * B + B + 1), 864 * (B - 1) * (B + 2) * (2 * B + 1)};
    if (w == "a2" || w == "a3" || w == "a4") return {144 * (16 * B * B + 16 * B + 1), 1728 * (2 * B + 1) * (32 * B * B + 32 * B - 1)};
  } else if (f == "72q.2") {
    wide N = P2(a) * P3(b);
    if (w == "a1") return {144 * (N * N + S(dl) * N + 1), -1728 * (S(dl) * 2 * N + 1) * (P2(2 * a - 1) * P3(2 * b) + S(dl) * P2(a - 1) * P3(b) - 1)};
    if (w == "a2") return {144 * (16 * N * N + S(dl) * 16 * N + 1), -1728 * (S(dl) * 2 * N + 1) * (32 * N * N + S(dl) * 32 * N - 1)};
    if (w == "a3")
      return {144 * (P2(2 * a - 4) * P3(2 * b) + S(dl) * N + 1),
              864 * (S(dl) * P2(a - 1) * P3(b) + 1) * (-P2(2 * a - 4) * P3(2 * b) + S(dl) * 2 * N + 2)};
    if (w == "a4") return {144 * (N * N + S(dl) * 14 * N + 1), -1728 * (S(dl) * N - 1) * (N * N + S(dl) * 34 * N + 1)};
  } else if (f == "72q.3") {
    wide A = P2(a), B = P3(b);
    if (w == "a1") return {144 * (B * B + S(dl) * A * B + A * A), 1728 * S(b) * (B - S(dl) * A) * (A * A + S(dl) * 5 * P2(a - 1) * B + B * B)};
    if (w == "a2") return {144 * (B * B - S(dl) * 14 * A * B + A * A), 1728 * S(b) * (B - S(dl) * A) * (A * A + S(dl) * 34 * A * B + B * B)};
    if (w == "a3") return {144 * (B * B + S(dl) * 16 * A * B + 16 * A * A), -1728 * S(b) * (B + S(dl) * 2 * A) * (32 * A * A + S(dl) * 32 * A * B - B * B)};
    if (w == "a4")
      return {144 * (B * B + S(dl) * A * B + P2(2 * a - 4)),
              864 * S(b) * (B + S(dl) * P2(a - 1)) * (-P2(2 * a - 4) + S(dl) * 2 * A * B + 2 * B * B)};
  } else if (f == "72q.4") {
    if (w == "a1") return {144 * (dd + 1), -864 * d * (2 * dd + 3)};
    if (w == "a2") return {144 * (dd - 4), -1728 * d * (dd + 12)};
    if (w == "b1") return {1296 * (dd + 1), 23328 * d * (2 * dd + 3)};
    if (w == "b2") return {1296 * (dd - 4), 46656 * d * (dd + 12)};
  } else if (f == "72q.5") {
    if (w == "a1") return {144 * (dd + S(dl) * P2(a - 2)), -864 * d * (S(dl) * 2 * dd + 3 * P2(a - 2))};
    if (w == "a2") return {144 * (dd - S(dl) * P2(a)), -1728 * d * (S(dl) * dd + 3 * P2(a))};
    if (w == "b1") return {1296 * (dd + S(dl) * P2(a - 2)), 23328 * d * (S(dl) * 2 * dd + 3 * P2(a - 2))};
    if (w == "b2") return {1296 * (dd - S(dl) * P2(a)), 46656 * d * (S(dl) * dd + 3 * P2(a))};
  } else if (f == "72q.6") {
    if (w == "a1") return {36 * (dd - 1), 864 * d * quarter(dd + 3)};
    if (w == "a2") return {144 * (4 * dd + 1), 1728 * d * (8 * dd + 3)};
    if (w == "b1") return {324 * (dd - 1), -23328 * d * quarter(dd + 3)};
    if (w == "b2") return {1296 * (4 * dd + 1), -46656 * d * (8 * dd + 3)};
  } else if (f == "72q.7") {
    if (w == "a1") return {36 * (dd - P3(b + 1)), 864 * d * quarter(dd + P3(b + 2))};
    if (w == "a2") return {144 * (4 * dd - P3(b + 1)), 1728 * d * (8 * dd + P3(b + 2))};
  } else if (f == "72q.8") {
    if (w == "a1") return {144 * (dd + P3(b + 1)), -864 * d * (2 * dd + P3(b + 2))};
    if (w == "a2") return {144 * (dd - 4 * P3(b + 1)), -1728 * d * (dd + 4 * P3(b + 2))};
  } else if (f == "72q.9") {
    if (w == "a1") return {144 * (dd + S(e) * P2(a - 2) * P3(b + 1)), 1728 * d * (dd + S(e) * P2(a - 3) * P3(b + 2))};
    if (w == "a2") return {144 * (dd + S(e + 1) * P2(a) * P3(b + 1)), 1728 * d * (dd + S(e) * P2(a) * P3(b + 2))};
  } else if (f == "72q.10") {
    if (w == "a1") return {144 * (dd - P2(a - 2) * P3(b + 1)), 1728 * d * (dd - P2(a - 3) * P3(b + 2))};
    if (w == "a2") return {144 * (dd + P2(a) * P3(b + 1)), 1728 * d * (dd - P2(a) * P3(b + 2))};
  } else if (f == "72q.11" || f == "72q.12") {
    if (w == "a1") return {144 * (dd + 24), 1728 * d * (dd + 36)};
    if (w == "a2") return {144 * (dd - 96), 1728 * d * (dd + 288)};
  }
  no_row(r, w);
}

CC forms(const Representation& r, std::string_view w) {
  int level = family_level(r.family);
  if (level == 18) return forms18(r, w, widen(family_value(r)));
  if (level == 36) return forms36(r, w, widen(family_value(r)));
  if (level == 72) return forms72(r, w);
  throw error(errc::invalid_argument, "no curves attached to " + r.family);
}

int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

i128 d_mod(std::mt19937_64& g, int m, int r) { return static_cast<i128>(m) * uniform(g, -400, 400) + r; }

void pick_deltas(std::mt19937_64& g, Representation& r) {
  static const int pairs[3][2] = {{0, 0}, {0, 1}, {1, 0}};
  const int* p = pairs[uniform(g, 0, 2)];
  r.params["delta1"] = p[0];
  r.params["delta2"] = p[1];
}

// smallest d = 1 mod 4 at or after a random start with 3^b | d^2 + c
i128 d_for_cube_divisor(std::mt19937_64& g, int b, i128 c) {
  i128 m = 1;
  for (int i = 0; i < b; ++i) m *= 3;
  i128 d = d_mod(g, 4, 1);
  for (i128 i = 0; i <= 4 * m; ++i, d += 4)
    if ((d * d + c) % m == 0) return d;
  throw error(errc::not_found, "no d with 3^b | d^2 + c");
}

Representation raw_sample(std::string_view fam, std::mt19937_64& g) {
  Representation r;
  r.family = std::string(fam);
  auto& p = r.params;
  auto odd = [&](int lo, int hi) { return 2 * uniform(g, lo / 2, (hi - 1) / 2) + 1; };
  if (fam == "18q.1") { p["a"] = uniform(g, 5, 14); p["b"] = uniform(g, 0, 6); p["delta"] = uniform(g, 0, 1); }
  else if (fam == "18q.2") { p["a"] = odd(5, 23); }
  else if (fam == "18q.3") { p["a"] = uniform(g, 5, 14); p["b"] = uniform(g, 1, 8); pick_deltas(g, r); }
  else if (fam == "18q.4") { p["a"] = uniform(g, 7, 18); p["b"] = uniform(g, 0, 8); pick_deltas(g, r); p["d"] = d_mod(g, 4, 1); }
  else if (fam == "18q.5") { p["a"] = uniform(g, 7, 26); pick_deltas(g, r); p["d"] = d_mod(g, 4, 1); }
  else if (fam == "18q.6") {
    int a = odd(7, 25), b = uniform(g, 1, 7);
    p["a"] = a; p["b"] = b; p["d"] = d_for_cube_divisor(g, b, i128(1) << a);
  }
  else if (fam == "36q.1") {
    i128 v0 = 1, v1 = 3;
    for (int k = uniform(g, 0, 7); k > 0; --k) { i128 t = 4 * v1 - v0; v0 = v1; v1 = t; }
    i128 u = isqrt(3 * v0 * v0 - 2);
    p["u"] = mod(u, 4) == 1 ? u : -u;
    p["v"] = mod(v0, 4) == 1 ? v0 : -v0;
  }
  else if (fam == "36q.2") { p["d"] = d_mod(g, 8, 1); }
  else if (fam == "72q.6") { p["d"] = d_mod(g, 8, 5); }
  else if (fam == "36q.3" || fam == "72q.7" || fam == "72q.8") { p["b"] = odd(1, 15); p["d"] = d_mod(g, 4, 1); }
  else if (fam == "36q.4" || fam == "36q.5") {
    p["b"] = odd(1, 15); p["d"] = d_mod(g, 4, 1); p["delta"] = uniform(g, 0, 1);
    if (fam == "36q.5") p["n"] = 7;
  }
  else if (fam == "36q.6" || fam == "72q.4") { p["d"] = d_mod(g, 4, 1); }
  else if (fam == "36q.7") { p["b"] = 2 * uniform(g, 0, 7); p["d"] = d_mod(g, 4, 1); }
  else if (fam == "72q.1") { p["b"] = odd(1, 15); }
  else if (fam == "72q.2" || fam == "72q.3") { p["a"] = uniform(g, 2, 3); p["b"] = uniform(g, 0, 12); p["delta"] = uniform(g, 0, 1); }
  else if (fam == "72q.5") { p["a"] = uniform(g, 4, 5); p["delta"] = uniform(g, 0, 1); p["d"] = d_mod(g, 4, 1); }
  else if (fam == "72q.9") { p["a"] = uniform(g, 4, 5); p["b"] = uniform(g, 0, 12); pick_deltas(g, r); p["d"] = d_mod(g, 4, 1); }
  else if (fam == "72q.10") {
    p["a"] = uniform(g, 4, 5); p["b"] = uniform(g, 0, 12); p["delta"] = uniform(g, 0, 1); p["d"] = d_mod(g, 4, 1); p["n"] = 7;
  }
  else if (fam == "72q.11" || fam == "72q.12") {
    int b = uniform(g, 0, 7);
    p["b"] = b; p["d"] = d_for_cube_divisor(g, b, 32);
    if (fam == "72q.12") p["n"] = 7;
  }
  else throw error(errc::invalid_argument, "no sampler for family '" + std::string(fam) + "'");
  return r;
}

bool usable(const Representation& r) {
  try {
    if (!side_condition_violation(r).empty() || family_value(r) <= 0) return false;
    for (auto& w : family_curve_names(r.family)) {
      weierstrass_invariants(instantiate_family_curve(r, w));
      stated_discriminant(r, w);
      appendix_c_invariants(r, w);
    }
    return true;
  } catch (const error& e) {
    if (e.code() == errc::overflow) return false;
    throw;
  } catch (const std::overflow_error&) {
    return false;
  }
}

}  // namespace

std::pair<i128, i128> appendix_c_invariants(const Representation& rep, std::string_view which) {
  CC c = forms(rep, which);
  return {narrow(c.c4, "c4"), narrow(c.c6, "c6")};
}

Representation random_family_representation(std::string_view family, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Representation r = raw_sample(family, rng);
    if (usable(r)) return r;
  }
  throw error(errc::not_found, "no usable parameters sampled for " + std::string(family));
}

std::vector<AppendixRowResult> verify_appendix(int samples, std::uint64_t seed) {
  std::vector<AppendixRowResult> out;
  std::mt19937_64 rng(seed);
  for (auto& fam : family_ids()) {
    if (is_set_family(fam)) continue;
    auto names = family_curve_names(fam);
    std::size_t base = out.size();
    for (auto& w : names) {
      AppendixRowResult row;
      row.curve = fam + "." + w;
      out.push_back(row);
    }
    for (int s = 0; s < samples; ++s) {
      Representation r = random_family_representation(fam, rng);
      for (std::size_t i = 0; i < names.size(); ++i) {
        AppendixRowResult& row = out[base + i];
        Invariants inv = weierstrass_invariants(instantiate_family_curve(r, names[i]));
        CC c = forms(r, names[i]);
        wide disc = widen(stated_discriminant(r, names[i]));
        bool bad = false;
        ++row.samples;
        if (widen(inv.c4) != c.c4) { ++row.c4_mismatch; bad = true; }
        if (widen(inv.c6) != c.c6) { ++row.c6_mismatch; bad = true; }
        if (widen(inv.disc) != disc) { ++row.disc_mismatch; bad = true; }
        if (c.c4 * c.c4 * c.c4 - c.c6 * c.c6 != 1728 * disc) { ++row.identity_fail; bad = true; }
        if (bad && !row.first_mismatch) row.first_mismatch = r;
      }
    }
  }
  return out;
}

const std::vector<ExclusionTableRow>& reference_exclusion_table() {
  static const std::vector<ExclusionTableRow> t = {
      {5, 24, {13, 19, 23}},
      {11, 24, {13, 17, 19, 23}},
      {13, 12, {11}},
      {17, 24, {5, 17, 23}},
      {23, 24, {19, 23}},
      {29, 24, {7, 11, 13, 17, 19, 23}},
      {31, 24, {5, 11}},
      {41, 24, {5, 7, 11, 17, 19, 23}},
      {47, 24, {5, 11, 13, 17, 19, 23}},
      {59, 24, {5, 7, 11, 13, 19, 23}},
      {67, 120, {7, 11, 13, 29, 37, 41, 43, 59, 67, 71, 89, 101, 103}},
      {71, 6, {5}},
      {73, 120, {41, 71, 89}},
      {79, 24, {5, 7, 11, 13, 19, 23}},
      {89, 24, {13, 17, 19, 23}},
      {97, 12, {11}},
  };
  return t;
}

const std::vector<IntersectionClaim>& reference_intersections() {
  static const std::vector<IntersectionClaim> t = {
      {1, 2, {5, 7, 11, 13, 23, 31, 37, 73}},
      {1, 3, {11}},
      {1, 5, {7, 31}},
      {1, 7, {7, 37, 127}},
      {1, 8, {13}},
      {2, 3, {11}},
      {3, 5, {43}},
      {3, 4, {}},
      {3, 7, {}},
      {3, 8, {}},
      {4, 5, {}},
      {5, 8, {}},
      {7, 8, {}},
  };
  return t;
}

const std::vector<CongruenceClaim>& reference_congruences() {
  static const std::vector<CongruenceClaim> t = {{53, 96}, {53, 120}, {53, 144}, {65, 81}, {65, 84}};
  return t;
}

namespace {

// bit i-1 set when q lies in S_i
std::vector<std::pair<i128, unsigned>> set_masks(i128 bound, int jobs) {
  if (bound > scan_guard * 100) throw error(errc::invalid_argument, "bound too large for a membership sweep");
  std::vector<i128> primes;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(bound)))
    if (p >= 5) primes.push_back(p);
  std::vector<std::pair<i128, unsigned>> out(primes.size());
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < primes.size(); i += step) {
      unsigned m = 0;
      for (int s = 1; s <= 8; ++s)
        if (!search_family(primes[i], "S" + std::to_string(s)).empty()) m |= 1u << (s - 1);
      out[i] = {primes[i], m};
    }
  };
  std::size_t n = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work, t, n);
  work(0, n);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

bool IntersectionCheck::ok() const {
  if (found.size() != claim.members.size()) return false;
  for (std::size_t i = 0; i < found.size(); ++i)
    if (found[i] != claim.members[i]) return false;
  return true;
}

std::vector<IntersectionCheck> verify_intersections(i128 bound, int jobs) {
  auto masks = set_masks(bound, jobs);
  std::vector<IntersectionCheck> out;
  for (auto& c : reference_intersections()) {
    IntersectionCheck chk{c, {}};
    unsigned want = (1u << (c.i - 1)) | (1u << (c.j - 1));
    for (auto& [q, m] : masks)
      if ((m & want) == want) chk.found.push_back(q);
    out.push_back(std::move(chk));
  }
  return out;
}

std::vector<CongruenceCheck> verify_congruences(i128 bound, int jobs) {
  auto masks = set_masks(bound, jobs);
  std::vector<CongruenceCheck> out;
  for (auto& c : reference_congruences()) {
    CongruenceCheck chk;
    chk.claim = c;
    for (auto& [q, m] : masks) {
      if (mod(q, c.modulus) != c.residue) continue;
      ++chk.candidates;
      if (m != 0 || membership(q).in_S0) chk.in_S0.push_back(q);
    }
    out.push_back(std::move(chk));
  }
  return out;
}

std::vector<CookieCheck> verify_cookie(int q_max) {
  std::vector<CookieCheck> out;
  for (auto q : primes_up_to(static_cast<std::uint32_t>(q_max))) {
    if (q < 5) continue;
    for (int l0 : {1, 7, 13, 19})
      for (int delta : {0, 1}) {
        CookieCheck c;
        c.q = static_cast<int>(q);
        c.ell0 = l0;
        c.delta = delta;
        c.ell = smallest_cookie_prime(q, l0, delta);
        c.e_q = std::exp(static_cast<double>(q));
        out.push_back(c);
      }
  }
  return out;
}

std::vector<TableCheck> verify_exclusion_table(const SearchBounds& bounds) {
  std::vector<TableCheck> out;
  for (auto& row : reference_exclusion_table()) {
    TableCheck t{row, excluded_exponents(row.q, Alpha::of(1), bounds)};
    t.matches = !t.report.incomplete && t.report.excluded.same_set(ResidueClassSet(row.modulus, row.residues));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace tcl
