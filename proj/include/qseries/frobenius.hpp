#pragma once

// Combinatorial side: explicit enumeration of k-colored generalized Frobenius
// symbols.  A symbol is a pair of rows of equal length d,
//
//     ( a_1 > a_2 > ... > a_d | b_1 > b_2 > ... > b_d ),
//
// whose entries are colored nonnegative integers ordered by
// 0_1 < 0_2 < ... < 0_k < 1_1 < ..., with strict decrease in each row; its
// weight is d + sum(a_i values) + sum(b_i values).  cphi_k(n) counts symbols
// of weight n.  This enumerator is the ground-truth oracle for the analytic
// engine and also classifies symbols by color difference
// (sum of top colors - sum of bottom colors) and by order under the cyclic
// color shift sigma: color c -> c mod k + 1.
//
// phi_k(n) (uncolored, rows non-increasing with at most k repetitions of each
// value) is enumerated here too.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qseries/arith.hpp"
#include "qseries/series.hpp"

namespace qseries {

struct ColoredPart {
  long value = 0;
  long color = 1;  // 1..k
  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

// total order 0_1 < 0_2 < ... < 0_k < 1_1 < ...
inline bool part_less(const ColoredPart& a, const ColoredPart& b) {
  return a.value != b.value ? a.value < b.value : a.color < b.color;
}

using SymbolRow = std::vector<ColoredPart>;  // strictly decreasing

struct FrobeniusSymbol {
  SymbolRow top;
  SymbolRow bottom;
  friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;

  long weight() const {
    long w = static_cast<long>(top.size());
    for (const auto& p : top) w += p.value;
    for (const auto& p : bottom) w += p.value;
    return w;
  }

  long color_difference() const {
    long m = 0;
    for (const auto& p : top) m += p.color;
    for (const auto& p : bottom) m -= p.color;
    return m;
  }
};

inline std::string render_part(const ColoredPart& p) {
  return std::to_string(p.value) + "_" + std::to_string(p.color);
}

inline std::string render_symbol(const FrobeniusSymbol& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.top.size(); ++i) out += (i ? " " : "") + render_part(s.top[i]);
  out += " | ";
  for (size_t i = 0; i < s.bottom.size(); ++i) out += (i ? " " : "") + render_part(s.bottom[i]);
  out += ")";
  return out;
}

namespace detail {

// Smallest possible value-sum of a strictly decreasing row of length d with k
// colors: take the d least colored parts (k copies of 0, then of 1, ...).
inline long row_min_sum(long d, long k) {
  long s = 0;
  for (long i = 0; i < d; ++i) s += i / k;
  return s;
}

// All multisets of nonnegative values of size d, sum s, multiplicity <= k per
// value, values <= vmax, as (value, multiplicity) lists with values descending.
inline void value_multisets(long d, long s, long k, long vmax,
                            std::vector<std::pair<long, long>>& cur,
                            std::vector<std::vector<std::pair<long, long>>>& out) {
  if (d == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  if (row_min_sum(d, k) > s) return;
  for (long v = std::min(vmax, s); v >= 0; --v) {
    // v must be the largest remaining value; lower values cannot make up the
    // sum if v is too small.
    if (v * d < s) break;
    long mult_max = std::min(k, d);
    for (long j = 1; j <= mult_max && j * v <= s; ++j) {
      cur.emplace_back(v, j);
      value_multisets(d - j, s - j * v, k, v - 1, cur, out);
      cur.pop_back();
    }
  }
}

// All color subsets of {1..k} of size j, each sorted descending.
inline void color_subsets(long k, long j, long max_color, std::vector<long>& cur,
                          std::vector<std::vector<long>>& out) {
  if (j == 0) {
    out.push_back(cur);
    return;
  }
  for (long c = max_color; c >= j; --c) {
    cur.push_back(c);
    color_subsets(k, j - 1, c - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// All strictly decreasing rows of length d with value-sum s, in a fixed
// deterministic order.  Results are memoized per (k) enumerator instance.
class SymbolEnumerator {
 public:
  explicit SymbolEnumerator(long k) : k_(k) {
    if (k < 1) throw SeriesError("SymbolEnumerator: need k >= 1");
  }

  long colors() const { return k_; }

  const std::vector<SymbolRow>& rows(long d, long s) {
    auto key = std::make_pair(d, s);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    std::vector<SymbolRow> result;
    if (d >= 0 && s >= detail::row_min_sum(d, k_)) {
      std::vector<std::vector<std::pair<long, long>>> msets;
      std::vector<std::pair<long, long>> cur;
      detail::value_multisets(d, s, k_, s, cur, msets);
      for (const auto& mset : msets) expand_colors(mset, 0, {}, result);
    }
    return cache_.emplace(key, std::move(result)).first->second;
  }

  std::vector<FrobeniusSymbol> symbols(long n) {
    std::vector<FrobeniusSymbol> out;
    if (n < 0) return out;
    for (long d = 0;; ++d) {
      long base = detail::row_min_sum(d, k_);
      if (d + 2 * base > n) break;
      long budget = n - d;
      for (long s_top = base; s_top <= budget - base; ++s_top) {
        const auto& tops = rows(d, s_top);
        const auto& bots = rows(d, budget - s_top);
        for (const auto& t : tops)
          for (const auto& b : bots) out.push_back(FrobeniusSymbol{t, b});
      }
    }
    return out;
  }

 private:
  void expand_colors(const std::vector<std::pair<long, long>>& mset, size_t idx,
                     SymbolRow acc, std::vector<SymbolRow>& out) {
    if (idx == mset.size()) {
      out.push_back(std::move(acc));
      return;
    }
    auto [v, j] = mset[idx];
    std::vector<std::vector<long>> subsets;
    std::vector<long> cur;
    detail::color_subsets(k_, j, k_, cur, subsets);
    for (const auto& sub : subsets) {
      SymbolRow next = acc;
      for (long c : sub) next.push_back(ColoredPart{v, c});
      expand_colors(mset, idx + 1, std::move(next), out);
    }
  }

  long k_;
  std::map<std::pair<long, long>, std::vector<SymbolRow>> cache_;
};

inline std::vector<FrobeniusSymbol> enumerate_symbols(long k, long n) {
  return SymbolEnumerator(k).symbols(n);
}

// Order of a symbol under the color shift sigma (c -> c mod k + 1): the least
// divisor ell of k such that applying sigma^ell and re-sorting returns the
// same symbol.
inline long symbol_order(const FrobeniusSymbol& sym, long k) {
  auto shift_row = [&](const SymbolRow& row, long ell) {
    SymbolRow r = row;
    for (auto& p : r) p.color = (p.color - 1 + ell) % k + 1;
    std::sort(r.begin(), r.end(), [](const ColoredPart& a, const ColoredPart& b) {
      return part_less(b, a);  // descending
    });
    for (size_t i = 1; i < r.size(); ++i)
      if (!part_less(r[i], r[i - 1]))
        throw SeriesError("symbol_order: color shift broke strict decrease");
    return r;
  };
  for (long ell : divisors(k))
    if (shift_row(sym.top, ell) == sym.top && shift_row(sym.bottom, ell) == sym.bottom)
      return ell;
  throw SeriesError("symbol_order: no divisor fixed the symbol (internal error)");
}

// One enumeration pass collecting every refined statistic at weight n.
struct RefinedCounts {
  long k = 0;
  long n = 0;
  Int total = 0;                              // cphi_k(n)
  std::map<long, Int> by_color_difference;    // m -> count
  std::map<long, Int> by_order;               // ell | k -> count with order exactly ell
  std::map<long, Int> full_order_by_residue;  // j in [0,k) -> order-k symbols with m = j mod k
};

inline RefinedCounts refined_counts(long k, long n) {
  RefinedCounts rc;
  rc.k = k;
  rc.n = n;
  SymbolEnumerator en(k);
  for (const auto& sym : en.symbols(n)) {
    rc.total += 1;
    long m = sym.color_difference();
    rc.by_color_difference[m] += 1;
    long ord = symbol_order(sym, k);
    rc.by_order[ord] += 1;
    if (ord == k) rc.full_order_by_residue[floor_mod(m, k)] += 1;
  }
  return rc;
}

// Count of symbols with full order k (every color class moved by each
// nontrivial shift), via inclusion-exclusion over the engine's counts:
//   overline_k(n) = sum_{ell | gcd(k, n)} mu(ell) cphi_{k/ell}(n/ell).
// The forward map takes cphi values from any source (engine or enumeration).
template <class CphiFn>
Int overline_via_mobius(long k, long n, CphiFn&& cphi_value) {
  Int acc = 0;
  for (long ell : divisors(gcd_long(k, n == 0 ? k : n)))
    acc += Int(mobius(ell)) * cphi_value(k / ell, n / ell);
  return acc;
}

// Inversion: cphi_k(n) = sum_{ell | k, (k/ell) | n} overline_ell(n ell / k).
template <class OverlineFn>
Int cphi_via_overline(long k, long n, OverlineFn&& overline_value) {
  Int acc = 0;
  for (long ell : divisors(k)) {
    long scale = k / ell;
    if (n % scale != 0) continue;
    acc += overline_value(ell, n / scale);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Uncolored F-partitions phi_k: rows non-increasing, each value repeated at
// most k times per row; weight = d + sum(top) + sum(bottom).
// ---------------------------------------------------------------------------

inline Int phi_count(long k, long n) {
  if (k < 1) throw SeriesError("phi_count: need k >= 1");
  if (n < 0) return 0;
  // rows_by_sum[d][s] = number of admissible rows of length d and sum s
  auto rows_count = [&](long d, long s) {
    std::vector<std::vector<std::pair<long, long>>> msets;
    std::vector<std::pair<long, long>> cur;
    detail::value_multisets(d, s, k, s, cur, msets);
    return static_cast<long>(msets.size());
  };
  Int total = 0;
  for (long d = 0; d <= n; ++d) {
    long base = detail::row_min_sum(d, k);
    if (d + 2 * base > n) break;
    long budget = n - d;
    for (long s_top = base; s_top <= budget - base; ++s_top) {
      long a = rows_count(d, s_top);
      long b = rows_count(d, budget - s_top);
      total += Int(a) * Int(b);
    }
  }
  return total;
}

}  // namespace qseries
