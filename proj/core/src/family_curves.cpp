#include "tcl/curves.hpp"

#include <functional>

#include "wide.hpp"

namespace tcl {

using detail::narrow;
using detail::wide;
using detail::widen;

namespace {

wide P2(int k) {
  if (k < 0) throw error(errc::invalid_argument, "negative power of 2 in family coefficients");
  return wide(1) << k;
}

wide P3(int k) {
  if (k < 0) throw error(errc::invalid_argument, "negative power of 3 in family coefficients");
  wide r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

wide S(long e) { return (e & 1) ? wide(-1) : wide(1); }

wide div_exact(const wide& n, long d, const char* what) {
  if (n % d != 0) throw error(errc::invalid_argument, std::string("non-integral coefficient: ") + what);
  return n / d;
}

struct Row {
  wide a1 = 0, a2 = 0, a4 = 0, a6 = 0, disc = 0;
};

struct Vars {
  const Representation& r;
  wide q;  // q, or q^n for the q^n rows
  int a = 0, b = 0, dl = 0, d1 = 0, d2 = 0;
  wide d = 0, u = 0, v = 0;
};

using RowFn = std::function<Row(const Vars&, std::string_view)>;

[[noreturn]] void bad_curve(const Vars& x, std::string_view w) {
  throw error(errc::invalid_argument, "family " + x.r.family + " has no curve '" + std::string(w) + "'");
}

Row fam18_1(const Vars& x, std::string_view w) {
  int a = x.a, b = x.b, dl = x.dl;
  const wide& q = x.q;
  if (w == "a1") return {1, S(dl + 1) * P2(a - 1) * P3(b + 1) - 1, P2(a - 4) * P3(b + 2) * q, 0, P2(2 * a - 8) * P3(2 * b + 6) * q * q};
  if (w == "a2") return {1, S(dl + 1) * P2(a - 1) * P3(b + 1) - 1, -P2(a - 2) * P3(b + 2) * q, S(dl) * P2(a - 4) * P3(b + 3) * (2 * q - S(dl)) * q, P2(a - 4) * P3(b + 6) * q};
  if (w == "a3") return {1, S(dl + 1) * P2(a - 3) * P3(b + 1) - 1, P2(2 * a - 8) * P3(2 * b + 2), 0, S(dl) * P2(4 * a - 16) * P3(4 * b + 6) * q};
  if (w == "a4") return {1, S(dl) * P2(a - 2) * P3(b + 1) - 1, S(dl) * P2(a - 2) * P3(b + 2), P2(a - 4) * P3(b + 3) * (q - 2 * S(dl)), S(dl + 1) * P2(a - 4) * P3(b + 6) * q * q * q * q};
  bad_curve(x, w);
}

Row fam18_2(const Vars& x, std::string_view w) {
  int a = x.a;
  const wide& q = x.q;
  if (w == "a1") return {1, -3 * P2(a - 1) - 1, P2(a - 4) * 27 * q, 0, P2(2 * a - 8) * P3(8) * q * q};
  if (w == "a2") return {1, -3 * P2(a - 1) - 1, -P2(a - 2) * 27 * q, P2(a - 4) * 81 * (P2(a + 1) + 1) * q, P2(a - 4) * P3(7) * q};
  if (w == "a3") return {1, -3 * P2(a - 3) - 1, P2(2 * a - 8) * 9, 0, P2(4 * a - 16) * P3(7) * q};
  if (w == "a4") return {1, 3 * P2(a - 2) - 1, P2(a - 2) * 9, P2(a - 4) * 27 * (P2(a) - 1), -P2(a - 4) * P3(10) * q * q * q * q};
  bad_curve(x, w);
}

Row fam18_3(const Vars& x, std::string_view w) {
  int a = x.a, b = x.b, d1 = x.d1, d2 = x.d2;
  int dl = b + d1 + d2 + 1;
  const wide& q = x.q;
  wide a2_12 = div_exact(-1 + S(dl) * (3 * P2(a) + S(d1) * 3 * q), 4, "18q.3 a2");
  if (w == "a1") return {1, a2_12, S(d1) * P2(a - 4) * 9 * q, 0, P2(2 * a - 8) * P3(2 * b + 6) * q * q};
  if (w == "a2")
    return {1, a2_12, S(d1 + 1) * P2(a - 2) * 9 * q,
            S(dl + d1 + 1) * 27 * P2(a - 4) * (P2(a + 1) + S(d1 + d2) * P3(b)) * q, P2(a - 4) * P3(4 * b + 6) * q};
  if (w == "a3")
    return {1, div_exact(-1 + S(dl) * 3 * P2(a - 1) - S(b) * P3(b + 1), 4, "18q.3 a2"), P2(2 * a - 8) * 9, 0,
            S(d2) * P2(4 * a - 16) * P3(b + 6) * q};
  if (w == "a4")
    return {1, div_exact(-1 + S(dl + 1) * (3 * P2(a + 1) + S(d1 + 1) * 3 * q), 4, "18q.3 a2"),
            S(d1 + d2) * P2(a - 2) * P3(b + 2), S(dl) * P3(b + 3) * P2(a - 4) * (P3(b) + S(1 + d1 + d2) * P2(a)),
            S(b + dl) * P2(a - 4) * P3(b + 6) * q * q * q * q};
  bad_curve(x, w);
}

Row fam18_4(const Vars& x, std::string_view w) {
  int a = x.a, b = x.b, e = x.d1 + x.d2;
  const wide &q = x.q, &d = x.d;
  wide a2 = -div_exact(3 * d + 1, 4, "(3d+1)/4");
  if (w == "a1") return {1, a2, S(e + 1) * P2(a - 6) * P3(b + 2), 0, S(x.d1) * P2(2 * a - 12) * P3(2 * b + 6) * q};
  if (w == "a2") return {1, a2, S(e) * P2(a - 4) * P3(b + 2), S(e + 1) * P2(a - 6) * P3(b + 3) * d, S(e + 1) * P2(a - 6) * P3(b + 6) * q * q};
  bad_curve(x, w);
}

Row fam18_5(const Vars& x, std::string_view w) {
  int a = x.a, e = x.d1 + x.d2;
  const wide &q = x.q, &d = x.d;
  wide aa = -div_exact(3 * d + 1, 4, "(3d+1)/4");
  wide bb = div_exact(9 * d - 1, 4, "(9d-1)/4");
  if (w == "a1") return {1, aa, S(e + 1) * P2(a - 6) * 3, 0, S(x.d1) * P2(2 * a - 12) * 27 * q};
  if (w == "a2") return {1, aa, S(e) * P2(a - 4) * 3, S(e + 1) * P2(a - 6) * 9 * d, S(e + 1) * P2(a - 6) * 27 * q * q};
  if (w == "b1") return {1, bb, S(e + 1) * P2(a - 6) * 27, 0, S(x.d1) * P2(2 * a - 12) * P3(9) * q};
  if (w == "b2") return {1, bb, S(e) * P2(a - 4) * 27, S(e) * P2(a - 6) * 243 * d, S(e + 1) * P2(a - 6) * P3(9) * q * q};
  bad_curve(x, w);
}

Row fam18_6(const Vars& x, std::string_view w) {
  int a = x.a, b = x.b;
  const wide &q = x.q, &d = x.d;
  wide aa = -div_exact(3 * d + 1, 4, "(3d+1)/4");
  if (w == "a1") return {1, aa, -P2(a - 6) * 9, 0, P2(2 * a - 12) * P3(b + 6) * q};
  if (w == "a2") return {1, aa, P2(a - 4) * 9, -P2(a - 6) * 27 * d, -P2(a - 6) * P3(2 * b + 6) * q * q};
  bad_curve(x, w);
}

// y^2 = x^3 + a2 x^2 + a4 x rows
Row flat(wide a2, wide a4, wide disc) { return {0, a2, a4, 0, disc}; }

Row fam36(const Vars& x, std::string_view w) {
  const std::string& f = x.r.family;
  const wide &q = x.q, &d = x.d;
  int b = x.b, dl = x.dl;
  if (f == "36q.1") {
    wide uv = x.u * x.v;
    if (w == "a1") return flat(-3 * uv, 3 * q * q, -P2(4) * 27 * q * q * q * q);
    if (w == "a2") return flat(6 * uv, -3, P2(8) * 27 * q * q);
    if (w == "b1") return flat(9 * uv, 27 * q * q, -P2(4) * P3(9) * q * q * q * q);
    if (w == "b2") return flat(-18 * uv, -27, P2(8) * P3(9) * q * q);
  } else if (f == "36q.2") {
    if (w == "a1") return flat(-3 * d, 3 * q, -P2(4) * 27 * q * q);
    if (w == "a2") return flat(6 * d, -3, P2(8) * 27 * q);
    if (w == "b1") return flat(9 * d, 27 * q, -P2(4) * P3(9) * q * q);
    if (w == "b2") return flat(-18 * d, -27, P2(8) * P3(9) * q);
  } else if (f == "36q.3") {
    if (w == "a1") return flat(-3 * d, 9 * q, -P2(4) * P3(b + 6) * q * q);
    if (w == "a2") return flat(6 * d, -P3(b + 2), P2(8) * P3(2 * b + 6) * q);
  } else if (f == "36q.4" || f == "36q.5") {
    if (w == "a1") return flat(-3 * d, P3(b + 2), S(dl) * P2(4) * P3(2 * b + 6) * q);
    if (w == "a2") return flat(6 * d, S(dl) * 9 * q, P2(8) * P3(b + 6) * q * q);
  } else if (f == "36q.6") {
    if (w == "a1") return flat(-3 * d, 3, P2(4) * 27 * q);
    if (w == "a2") return flat(6 * d, 3 * q, P2(8) * 27 * q * q);
    if (w == "b1") return flat(9 * d, 27, P2(4) * P3(9) * q);
    if (w == "b2") return flat(-18 * d, 27 * q, P2(8) * P3(9) * q * q);
  } else if (f == "36q.7") {
    if (w == "a1") return flat(-3 * d, -P3(b + 2), P2(4) * P3(2 * b + 6) * q);
    if (w == "a2") return flat(6 * d, 9 * q, -P2(8) * P3(b + 6) * q * q);
  }
  bad_curve(x, w);
}

Row fam72(const Vars& x, std::string_view w) {
  const std::string& f = x.r.family;
  const wide &q = x.q, &d = x.d;
  int a = x.a, b = x.b, dl = x.dl;
  if (f == "72q.1") {
    if (w == "a1") return flat(24 * q - 3, 4 * P3(b + 2) * q, P2(8) * P3(2 * b + 6) * q * q);
    if (w == "a2") return flat(-48 * q + 6, 9, P2(10) * P3(b + 6) * q);
    if (w == "a3") return flat(24 * q + 6, P3(2 * b + 2), P2(10) * P3(4 * b + 6) * q);
    if (w == "a4") return flat(6 * q - 3, 9 * q * q, -P2(4) * P3(b + 6) * q * q * q * q);
  } else if (f == "72q.2") {
    if (w == "a1") return flat(S(dl + 1) * P2(a + 1) * P3(b + 1) - 3, P2(a) * P3(b + 2) * q, P2(2 * a + 4) * P3(2 * b + 6) * q * q);
    if (w == "a2") return flat(S(dl) * P2(a + 2) * P3(b + 1) + 6, 9, P2(a + 8) * P3(b + 6) * q);
    if (w == "a3") return flat(S(dl + 1) * P2(a - 1) * P3(b + 1) - 3, P2(2 * a - 4) * P3(2 * b + 2), S(dl) * P2(4 * a - 4) * P3(4 * b + 6) * q);
    if (w == "a4") return flat(S(dl + 1) * P2(a + 1) * P3(b + 1) + 6, 9 * q * q, S(dl + 1) * P2(a + 8) * P3(b + 6) * q * q * q * q);
  } else if (f == "72q.3") {
    if (w == "a1") return flat(S(b + 1) * 3 * (P3(b) - S(dl) * P2(a)), S(dl + 1) * P2(a) * P3(b + 2), P2(2 * a + 4) * P3(2 * b + 6) * q * q);
    if (w == "a2") return flat(S(b) * 6 * (P3(b) - S(dl) * P2(a)), 9 * q * q, S(dl + 1) * P2(a + 8) * P3(b + 6) * q * q * q * q);
    if (w == "a3") return flat(S(b) * 6 * (P3(b) + S(dl) * P2(a + 1)), P3(2 * b + 2), S(dl) * P2(a + 8) * P3(4 * b + 6) * q);
    if (w == "a4") return flat(S(b + 1) * 3 * (P3(b) + S(dl) * P2(a - 1)), P2(2 * a - 4) * 9, P2(4 * a - 4) * P3(b + 6) * q);
  } else if (f == "72q.4") {
    if (w == "a1") return flat(3 * d, -3, P2(4) * 27 * q);
    if (w == "a2") return flat(-6 * d, 3 * q, -P2(8) * 27 * q * q);
    if (w == "b1") return flat(-9 * d, -27, P2(4) * P3(9) * q);
    if (w == "b2") return flat(18 * d, 27 * q, -P2(8) * P3(9) * q * q);
  } else if (f == "72q.5") {
    if (w == "a1") return flat(-3 * d, S(dl + 1) * P2(a - 2) * 3, P2(2 * a) * 27 * q);
    if (w == "a2") return flat(6 * d, 3 * q, S(dl + 1) * P2(a + 6) * 27 * q * q);
    if (w == "b1") return flat(9 * d, S(dl + 1) * P2(a - 2) * 27, P2(2 * a) * P3(9) * q);
    if (w == "b2") return flat(-18 * d, 27 * q, S(dl + 1) * P2(a + 6) * P3(9) * q * q);
  } else if (f == "72q.6") {
    if (w == "a1") return flat(3 * d, 3 * q, -P2(4) * 27 * q * q);
    if (w == "a2") return flat(-6 * d, -3, P2(8) * 27 * q);
    if (w == "b1") return flat(-9 * d, 27 * q, -P2(4) * P3(9) * q * q);
    if (w == "b2") return flat(18 * d, -27, P2(8) * P3(9) * q);
  } else if (f == "72q.7") {
    if (w == "a1") return flat(3 * d, 9 * q, -P2(4) * P3(b + 6) * q * q);
    if (w == "a2") return flat(-6 * d, -P3(b + 2), P2(8) * P3(2 * b + 6) * q);
  } else if (f == "72q.8") {
    if (w == "a1") return flat(3 * d, -P3(b + 2), P2(4) * P3(2 * b + 6) * q);
    if (w == "a2") return flat(-6 * d, 9 * q, -P2(8) * P3(b + 6) * q * q);
  } else if (f == "72q.9") {
    int e = x.d1 + x.d2;
    if (w == "a1") return flat(-3 * d, S(e + 1) * P2(a - 2) * P3(b + 2), S(x.d1) * P2(2 * a) * P3(2 * b + 6) * q);
    if (w == "a2") return flat(6 * d, S(x.d1) * 9 * q, S(e + 1) * P2(a + 6) * P3(b + 6) * q * q);
  } else if (f == "72q.10") {
    if (w == "a1") return flat(-3 * d, P2(a - 2) * P3(b + 2), S(dl) * P2(2 * a) * P3(2 * b + 6) * q);
    if (w == "a2") return flat(6 * d, S(dl) * 9 * q, P2(a + 6) * P3(b + 6) * q * q);
  } else if (f == "72q.11" || f == "72q.12") {
    if (w == "a1") return flat(-3 * d, -72, P2(10) * P3(b + 6) * q);
    if (w == "a2") return flat(6 * d, P3(b + 2) * q, -P2(11) * P3(2 * b + 6) * q * q);
  }
  bad_curve(x, w);
}

Row family_row(const Representation& r, std::string_view which) {
  std::string bad = side_condition_violation(r);
  if (!bad.empty())
    throw error(errc::invalid_argument, r.to_string() + " violates side condition: " + bad);
  i128 Q = family_value(r);
  if (Q <= 0) throw error(errc::invalid_argument, r.to_string() + " gives a non-positive q");
  Vars x{r, widen(Q)};
  auto geti = [&](const char* k) { return r.has(k) ? r.geti(k) : 0; };
  auto getw = [&](const char* k) { return r.has(k) ? widen(r.get(k)) : wide(0); };
  x.a = geti("a");
  x.b = geti("b");
  x.dl = geti("delta");
  x.d1 = geti("delta1");
  x.d2 = geti("delta2");
  x.d = getw("d");
  x.u = getw("u");
  x.v = getw("v");
  const std::string& f = r.family;
  if (f == "18q.1") return fam18_1(x, which);
  if (f == "18q.2") return fam18_2(x, which);
  if (f == "18q.3") return fam18_3(x, which);
  if (f == "18q.4") return fam18_4(x, which);
  if (f == "18q.5") return fam18_5(x, which);
  if (f == "18q.6") return fam18_6(x, which);
  if (family_level(f) == 36) return fam36(x, which);
  if (family_level(f) == 72) return fam72(x, which);
  throw error(errc::invalid_argument, "no curves attached to " + f);
}

}  // namespace

std::vector<std::string> family_curve_names(std::string_view f) {
  if (f == "18q.1" || f == "18q.2" || f == "18q.3" || f == "72q.1" || f == "72q.2" || f == "72q.3")
    return {"a1", "a2", "a3", "a4"};
  if (f == "18q.5" || f == "36q.1" || f == "36q.2" || f == "36q.6" || f == "72q.4" || f == "72q.5" ||
      f == "72q.6")
    return {"a1", "a2", "b1", "b2"};
  if (family_level(f) == 0) return {};
  return {"a1", "a2"};
}

std::string instance_curve_index(std::string_view f, std::string_view) {
  if (f == "18q.1" || f == "18q.2" || f == "18q.3" || f == "36q.2" || f == "36q.3" || f == "72q.1" ||
      f == "72q.2" || f == "72q.3" || f == "72q.6" || f == "72q.7")
    return "1";
  return "2";
}

CurveModel instantiate_family_curve(const Representation& rep, std::string_view which) {
  Row row = family_row(rep, which);
  CurveModel m;
  m.a1 = narrow(row.a1, "a1");
  m.a2 = narrow(row.a2, "a2");
  m.a4 = narrow(row.a4, "a4");
  m.a6 = narrow(row.a6, "a6");
  m.label = rep.family + "." + std::string(which);
  m.rep = rep;
  return m;
}

i128 stated_discriminant(const Representation& rep, std::string_view which) {
  return narrow(family_row(rep, which).disc, "discriminant");
}

}  // namespace tcl
