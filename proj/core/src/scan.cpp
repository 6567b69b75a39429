#include <algorithm>
#include <thread>

#include "tcl/arith.hpp"
#include "tcl/families.hpp"

namespace tcl {

PellSequence pell_sequence_S8(int count) {
  if (count < 1) throw error(errc::invalid_argument, "pell_sequence_S8 needs count >= 1");
  PellSequence seq;
  i128 prev = 1, cur = 3;
  for (int k = 0; k < count; ++k) {
    i128 v = k == 0 ? prev : cur;
    if (k >= 2) {
      auto four = try_mul(4, cur);
      i128 next;
      if (!four || __builtin_sub_overflow(*four, prev, &next)) {
        seq.overflow = true;
        break;
      }
      prev = cur;
      cur = next;
      v = cur;
    }
    auto v2 = try_mul(v, v);
    auto three_v2 = v2 ? try_mul(*v2, 3) : std::nullopt;
    if (!three_v2) {
      seq.overflow = true;
      break;
    }
    PellTerm t;
    t.k = k;
    t.v = v;
    auto u = exact_sqrt(*three_v2 - 2);
    if (!u) throw error(errc::normalization_bug, "Pell term without u: v=" + to_string(v));
    t.u = *u;
    t.q_candidate = (*three_v2 - 1) / 2;
    t.prime = t.q_candidate >= 2 && is_prime(t.q_candidate);
    seq.terms.push_back(t);
  }
  return seq;
}

std::vector<std::vector<i128>> special_equation_search(std::string_view eq, int bound) {
  if (bound < 0) throw error(errc::invalid_argument, "negative search bound");
  std::vector<std::vector<i128>> out;
  if (eq == "frosty") {
    // 2^x = 3y^2 + 5
    for (int x = 0; x <= bound && x < 126; ++x) {
      i128 t = (i128(1) << x) - 5;
      if (t <= 0 || t % 3) continue;
      if (auto y = exact_sqrt(t / 3)) out.push_back({x, *y});
    }
  } else if (eq == "s2s6") {
    // d^2 = 4*3^b2 - 3^b6 + 16, b2 and b6 odd
    for (int b2 = 1; b2 <= bound; b2 += 2) {
      auto p2 = try_pow(3, static_cast<unsigned>(b2));
      if (!p2 || *p2 > i128_max / 8) break;
      for (int b6 = 1; b6 <= bound; b6 += 2) {
        auto p6 = try_pow(3, static_cast<unsigned>(b6));
        if (!p6) break;
        i128 t = 4 * *p2 - *p6 + 16;
        if (t < 0) break;
        if (auto d = exact_sqrt(t)) out.push_back({*d, b2, b6});
      }
    }
    std::sort(out.begin(), out.end());
  } else if (eq == "levi-ben-gerson") {
    // 2^x - 3^y = 1, x >= 2
    for (int x = 2; x <= bound && x < 126; ++x) {
      i128 t = (i128(1) << x) - 1;
      int y = 0;
      while (t % 3 == 0) {
        t /= 3;
        ++y;
      }
      if (t == 1) out.push_back({x, y});
    }
  } else {
    throw error(errc::invalid_argument, "unknown equation '" + std::string(eq) + "'");
  }
  return out;
}

std::optional<TrivialSolution> trivial_solutions(i128 q, int alpha) {
  if (q < 5 || alpha < 1) return std::nullopt;
  auto Q = try_pow(q, static_cast<unsigned>(alpha));
  if (Q && *Q <= i128_max / 4 && (4 * *Q - 1) % 3 == 0) {
    auto d = exact_sqrt((4 * *Q - 1) / 3);
    if (d && (*d & 1)) return TrivialSolution{(*d + 1) / 2, (1 - *d) / 2, 1, false};
  }
  if (alpha == 1 && q > 16 && (q - 16) % 3 == 0)
    if (auto d = exact_sqrt((q - 16) / 3)) return TrivialSolution{*d + 4, 4 - *d, 2, true};
  return std::nullopt;
}

std::optional<ScanSet> parse_scan_set(std::string_view s) {
  if (s == "outside-S") return ScanSet::outside_S;
  if (s == "S-minus-S0") return ScanSet::S_minus_S0;
  if (s == "S0") return ScanSet::S0;
  if (s == "T") return ScanSet::T;
  return std::nullopt;
}

std::string scan_set_name(ScanSet s) {
  switch (s) {
    case ScanSet::outside_S: return "outside-S";
    case ScanSet::S_minus_S0: return "S-minus-S0";
    case ScanSet::S0: return "S0";
    case ScanSet::T: return "T";
  }
  return "?";
}

namespace {

void check_guard(i128 x_max, bool override_guard) {
  if (x_max > scan_guard && !override_guard)
    throw error(errc::invalid_argument,
                "scan bound " + to_string(x_max) + " exceeds " + to_string(scan_guard) + " (override to force)");
  if (x_max > UINT32_MAX) throw error(errc::invalid_argument, "scan bound must fit in 32 bits");
}

// runs f over primes in [5, x_max] split into `jobs` contiguous chunks; results in prime order
template <class T, class F>
std::vector<T> parallel_over_primes(i128 x_max, int jobs, F&& f) {
  auto primes = primes_up_to(static_cast<std::uint32_t>(std::max<i128>(x_max, 0)));
  primes.erase(primes.begin(), std::lower_bound(primes.begin(), primes.end(), 5u));
  std::vector<T> out(primes.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(primes.size())));
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) out[i] = f(static_cast<i128>(primes[i]));
  };
  if (jobs == 1) {
    work(0, primes.size());
  } else {
    // interleaved chunks so the expensive large-q tail is shared
    std::vector<std::thread> pool;
    std::size_t chunk = 256;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        for (std::size_t lo = j * chunk; lo < primes.size(); lo += jobs * chunk)
          work(lo, std::min(primes.size(), lo + chunk));
      });
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace

std::vector<i128> scan_range(i128 x_max, ScanSet which, int jobs, const SearchBounds& bounds,
                             bool override_guard) {
  check_guard(x_max, override_guard);
  auto hits = parallel_over_primes<i128>(x_max, jobs, [&](i128 q) -> i128 {
    bool keep = false;
    switch (which) {
      case ScanSet::outside_S: keep = !membership(q, bounds).in_S; break;
      case ScanSet::S_minus_S0: {
        auto m = membership(q, bounds);
        keep = m.in_S && !m.in_S0;
        break;
      }
      case ScanSet::S0: keep = in_set(q, "S0", bounds); break;
      case ScanSet::T: keep = in_set(q, "T", bounds); break;
    }
    return keep ? q : 0;
  });
  std::vector<i128> out;
  for (i128 q : hits)
    if (q) out.push_back(q);
  return out;
}

std::vector<CensusRow> census(i128 x_max, int jobs, const SearchBounds& bounds, bool override_guard) {
  check_guard(x_max, override_guard);
  auto flags = parallel_over_primes<Membership>(x_max, jobs, [&](i128 q) { return membership(q, bounds); });
  auto primes = primes_up_to(static_cast<std::uint32_t>(std::max<i128>(x_max, 0)));
  primes.erase(primes.begin(), std::lower_bound(primes.begin(), primes.end(), 5u));

  std::vector<i128> marks;
  for (i128 x = 10; x <= x_max; x *= 10) marks.push_back(x);
  if (marks.empty() || marks.back() != x_max) marks.push_back(x_max);

  std::vector<CensusRow> rows;
  CensusRow acc;
  std::size_t i = 0;
  for (i128 x : marks) {
    for (; i < primes.size() && primes[i] <= x; ++i) {
      acc.count_S += flags[i].in_S;
      acc.count_S0 += flags[i].in_S0;
      acc.count_T += flags[i].in_T;
    }
    acc.x = x;
    rows.push_back(acc);
  }
  return rows;
}

}  // namespace tcl
