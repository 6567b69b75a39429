#include "tcl/frey.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "tcl/arith.hpp"
#include "wide.hpp"

namespace tcl {

using detail::narrow;
using detail::wide;
using detail::widen;

namespace {

bool normal_form(i128 A, i128 B, i128 C) {
  bool c_even = (C & 1) == 0;
  if (((A & 1) != 0) && !c_even) return false;
  return mod(B, 4) == (c_even ? 3 : 1);
}

wide wpow(wide b, int e) {
  wide r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

FreySolution normalize_solution(i128 A, i128 B, i128 C, i128 q, int alpha, std::optional<int> p) {
  if (A == 0 || B == 0 || C == 0) throw error(errc::invalid_argument, "A, B, C must be nonzero");
  if (alpha < 1) throw error(errc::invalid_argument, "alpha must be positive");
  if (q < 5 || !is_prime(q)) throw error(errc::not_a_solution, "q must be a prime >= 5, got " + to_string(q));
  if (gcd128(A, B) != 1) throw error(errc::not_a_solution, "A and B are not coprime");
  if (p && *p < 2) throw error(errc::invalid_argument, "exponent p must be at least 2");

  wide lhs = wpow(widen(A), 3) + wpow(widen(B), 3);
  wide qa = wpow(widen(q), alpha);
  if (p) {
    if (lhs != qa * wpow(widen(C), *p)) throw error(errc::not_a_solution, "A^3 + B^3 != q^alpha C^p");
  } else if (lhs == 0 || lhs % qa != 0) {
    throw error(errc::not_a_solution, "q^alpha does not divide A^3 + B^3");
  }

  bool may_negate = !p || (*p % 2 == 1);
  struct Cand {
    i128 A, B, C;
  };
  std::vector<Cand> cands{{A, B, C}, {B, A, C}};
  if (may_negate) {
    cands.push_back({-A, -B, -C});
    cands.push_back({-B, -A, -C});
  }
  for (auto& c : cands) {
    if (!normal_form(c.A, c.B, c.C)) continue;
    FreySolution s;
    s.A = c.A;
    s.B = c.B;
    s.C = c.C;
    s.q = q;
    s.alpha = alpha;
    s.branch = (c.C & 1) == 0 ? 0 : 1;
    s.p = p;
    s.verified = p.has_value();
    return s;
  }
  throw error(errc::no_normalization, "no symmetry brings (" + to_string(A) + "," + to_string(B) + "," +
                                          to_string(C) + ") to normal form");
}

CurveModel frey_curve(const FreySolution& s) {
  CurveModel m;
  m.label = "F" + std::to_string(s.branch);
  wide A = widen(s.A), B = widen(s.B);
  if (s.branch == 1) {
    m.a4 = narrow(3 * A * B, "a4");
    m.a6 = narrow(B * B * B - A * A * A, "a6");
    return m;
  }
  auto exact = [](const wide& n, int d, const char* what) {
    if (n % d != 0) throw error(errc::normalization_bug, std::string("non-integral Frey coefficient ") + what);
    return narrow(n / d, what);
  };
  wide s2 = (A + B) * (A + B);
  m.a1 = 1;
  m.a2 = exact(3 * (B - A) - 2, 8, "a2");
  m.a4 = exact(3 * s2, 64, "a4");
  m.a6 = exact(9 * (B - A) * s2, 512, "a6");
  return m;
}

ConductorClass frey_conductor(const FreySolution& s) {
  ConductorClass cc;
  cc.q = s.q;
  if ((s.C & 1) == 0)
    cc.level = 18;
  else
    cc.level = valuation(s.A, 2) >= 2 ? 36 : 72;
  Factorization f = factor(abs128(s.C));
  for (auto& [ell, e] : f.factors)
    if (ell != 2 && ell != 3 && ell != s.q) cc.R = checked_mul(cc.R, ell);
  cc.R_known = f.complete();
  return cc;
}

std::vector<FreySolution> search_solutions(const FreySearchBounds& bounds, int jobs) {
  std::vector<i128> qs;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(bounds.q_max)))
    if (p >= 5) qs.push_back(p);
  const int N = bounds.ab_max;

  auto integer_root = [](i128 x, int p) -> std::optional<i128> {
    i128 ax = abs128(x);
    auto r = static_cast<i128>(std::llround(std::pow(static_cast<long double>(ax), 1.0L / p)));
    for (i128 c = std::max<i128>(r - 1, 1); c <= r + 1; ++c)
      if (try_pow(c, static_cast<unsigned>(p)) == ax) return x < 0 ? -c : c;
    return std::nullopt;
  };

  auto work = [&](int a_lo, int a_hi, std::vector<FreySolution>& out) {
    for (int A = a_lo; A < a_hi; ++A) {
      if (A == 0) continue;
      for (int B = -N; B <= N; ++B) {
        if (B == 0 || gcd128(A, B) != 1) continue;
        i128 S = i128(A) * A * A + i128(B) * B * B;
        if (S == 0) continue;
        for (i128 q : qs) {
          if (S % q) continue;
          auto [alpha, rest] = valuation_split(S, q);
          for (int p : bounds.exponents) {
            auto C = integer_root(rest, p);
            if (!C) continue;
            try {
              out.push_back(normalize_solution(A, B, *C, q, alpha, p));
            } catch (const error& e) {
              if (e.code() != errc::no_normalization) throw;
            }
          }
        }
      }
    }
  };

  jobs = std::max(1, jobs);
  std::vector<std::vector<FreySolution>> parts(static_cast<std::size_t>(jobs));
  int span = 2 * N + 1;
  if (jobs == 1) {
    work(-N, N + 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      int lo = -N + span * j / jobs, hi = -N + span * (j + 1) / jobs;
      pool.emplace_back([&, lo, hi, j] { work(lo, hi, parts[static_cast<std::size_t>(j)]); });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<FreySolution> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  auto key = [](const FreySolution& s) { return std::make_tuple(s.q, s.alpha, *s.p, s.A, s.B, s.C); };
  std::sort(all.begin(), all.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
  all.erase(std::unique(all.begin(), all.end(), [&](auto& x, auto& y) { return key(x) == key(y); }), all.end());
  return all;
}

}  // namespace tcl
