#include "tcl/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tcl/arith.hpp"
#include "wide.hpp"

namespace tcl {

using detail::narrow;
using detail::wide;
using detail::widen;

namespace {

int jsign(const wide& c4, const wide& disc, int ell) {
  if (c4 == 0) return 1;
  auto val = [ell](wide x) {
    int e = 0;
    if (x < 0) x = -x;
    while (x % ell == 0) {
      x /= ell;
      ++e;
    }
    return e;
  };
  int v = 3 * val(c4) - val(disc);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

}  // namespace

Invariants weierstrass_invariants(const CurveModel& m) {
  wide a1 = widen(m.a1), a2 = widen(m.a2), a3 = widen(m.a3), a4 = widen(m.a4), a6 = widen(m.a6);
  wide b2 = a1 * a1 + 4 * a2;
  wide b4 = 2 * a4 + a1 * a3;
  wide b6 = a3 * a3 + 4 * a6;
  wide b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  wide c4 = b2 * b2 - 24 * b4;
  wide c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
  wide disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  if (disc == 0) throw error(errc::singular_model, "singular model " + describe(m));
  if (c4 * c4 * c4 - c6 * c6 != 1728 * disc)
    throw error(errc::normalization_bug, "invariant identity failed for " + describe(m));
  Invariants inv;
  inv.b2 = narrow(b2, "b2");
  inv.b4 = narrow(b4, "b4");
  inv.b6 = narrow(b6, "b6");
  inv.b8 = narrow(b8, "b8");
  inv.c4 = narrow(c4, "c4");
  inv.c6 = narrow(c6, "c6");
  inv.disc = narrow(disc, "discriminant");
  inv.j_sign2 = jsign(c4, disc, 2);
  inv.j_sign3 = jsign(c4, disc, 3);
  return inv;
}

std::string square_kind_name(SquareKind k) {
  switch (k) {
    case SquareKind::square: return "square";
    case SquareKind::minus3_square: return "minus3-square";
    case SquareKind::other: return "other";
  }
  return "other";
}

SquareClass discriminant_square_class(i128 disc) {
  if (disc == 0) throw error(errc::invalid_argument, "zero discriminant");
  SquareClass s;
  if (disc > 0) {
    if (auto t = exact_sqrt(disc)) {
      s.kind = SquareKind::square;
      s.witness = *t;
    }
  } else if ((-disc) % 3 == 0) {
    if (auto t = exact_sqrt(-disc / 3)) {
      s.kind = SquareKind::minus3_square;
      s.witness = *t;
    }
  }
  return s;
}

i128 trace_of_frobenius(const CurveModel& m, std::int64_t ell) {
  if (ell < 3 || !is_prime(ell)) throw error(errc::invalid_argument, "trace needs a prime ell >= 3");
  Invariants inv = weierstrass_invariants(m);
  if (inv.disc % ell == 0)
    throw error(errc::bad_reduction, "bad reduction at " + std::to_string(ell) + " for " + describe(m));
  const std::int64_t p = ell;
  auto r = [p](i128 v) { return static_cast<std::int64_t>(mod(v, p)); };
  std::int64_t a1 = r(m.a1), a2 = r(m.a2), a3 = r(m.a3), a4 = r(m.a4), a6 = r(m.a6);
  // quadratic character table
  std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y < p; ++y) chi[static_cast<std::size_t>(y * y % p)] = 1;
  // y^2 + (a1 x + a3) y = f(x)  <=>  (2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 f(x)
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t h = (a1 * x + a3) % p;
    std::int64_t f = (((x + a2) * x % p + a4) * x % p + a6) % p;
    std::int64_t D = (h * h + 4 * f) % p;
    sum += chi[static_cast<std::size_t>(D)];
  }
  return -sum;
}

CurveModel complete_square(const CurveModel& m) {
  Invariants inv = weierstrass_invariants(m);
  CurveModel out;
  out.a2 = inv.b2;
  out.a4 = checked_mul(8, inv.b4);
  out.a6 = checked_mul(16, inv.b6);
  out.label = m.label;
  out.rep = m.rep;
  return out;
}

std::optional<TwoTorsionForm> to_two_torsion_form(const CurveModel& m) {
  CurveModel w = m;
  int scale = 0;
  if (m.a1 != 0 || m.a3 != 0) {
    w = complete_square(m);
    scale = 12;
  }
  // integral roots of x^3 + A x^2 + B x + C
  const i128 A = w.a2, B = w.a4, C = w.a6;
  auto f = [&](i128 x) {
    wide X = widen(x);
    return ((X + widen(A)) * X + widen(B)) * X + widen(C);
  };
  std::vector<i128> cands;
  if (C == 0) cands.push_back(0);
  long double a = static_cast<long double>(A), b = static_cast<long double>(B), c = static_cast<long double>(C);
  // real roots by Newton from several starts, then integer neighbours
  long double bound = 1 + std::max({std::fabs(a), std::sqrt(std::fabs(b)), std::cbrt(std::fabs(c))}) * 3;
  for (long double x0 : {-bound, -bound / 3, 0.0L, bound / 3, bound}) {
    long double x = x0;
    for (int it = 0; it < 200; ++it) {
      long double fx = ((x + a) * x + b) * x + c;
      long double d = (3 * x + 2 * a) * x + b;
      if (d == 0) break;
      long double nx = x - fx / d;
      if (std::fabs(nx - x) < 1e-6L * (1 + std::fabs(x))) {
        x = nx;
        break;
      }
      x = nx;
    }
    if (!std::isfinite(x) || std::fabs(x) > 1e36L) continue;
    i128 r = static_cast<i128>(std::roundl(x));
    for (i128 k = -3; k <= 3; ++k) cands.push_back(r + k);
  }
  std::optional<i128> root;
  for (i128 r : cands) {
    try {
      if (f(r) == 0 && (!root || r < *root)) root = r;
    } catch (const std::exception&) {
    }
  }
  if (!root) return std::nullopt;
  TwoTorsionForm t;
  i128 r = *root;
  t.u = checked_add(checked_mul(3, r), A);
  t.v = checked_add(checked_add(checked_mul(3, checked_mul(r, r)), checked_mul(2, checked_mul(A, r))), B);
  t.disc_scale_log2 = scale;
  return t;
}

bool four_divisibility_predicate(i128 u, i128 v, std::int64_t ell) {
  if (ell < 5 || !is_prime(ell)) throw error(errc::invalid_argument, "predicate needs a prime ell >= 5");
  i128 um = mod(u, ell), vm = mod(v, ell);
  i128 disc = mod(um * um - 4 * vm, ell);
  if (vm == 0 || disc == 0)
    throw error(errc::bad_reduction, "bad reduction at " + std::to_string(ell));
  return jacobi_symbol(disc, ell) == 1 || jacobi_symbol(vm, ell) == 1;
}

CurveModel quadratic_twist(const CurveModel& m, i128 t) {
  if (m.a1 != 0 || m.a3 != 0) throw error(errc::invalid_argument, "twist needs a model with a1 = a3 = 0");
  if (t == 0 || squarefree_part(t) != t) throw error(errc::invalid_argument, "twist parameter must be squarefree");
  CurveModel out = m;
  out.a2 = checked_mul(t, m.a2);
  out.a4 = checked_mul(checked_mul(t, t), m.a4);
  out.a6 = checked_mul(checked_mul(checked_mul(t, t), t), m.a6);
  return out;
}

std::string describe(const CurveModel& m) {
  std::ostringstream os;
  if (!m.label.empty()) os << m.label << " ";
  os << "[" << to_string(m.a1) << "," << to_string(m.a2) << "," << to_string(m.a3) << "," << to_string(m.a4)
     << "," << to_string(m.a6) << "]";
  return os.str();
}

}  // namespace tcl
