#pragma once

// Ordinary partition numbers p(n) via Euler's pentagonal-number recurrence,
// with a process-wide memo (guarded; callers may race from worker threads).

#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "qseries/arith.hpp"

namespace qseries {

namespace detail {
struct PartitionTable {
  std::mutex mu;
  std::vector<Int> p{Int(1)};  // p[0] = 1

  // Extend so p[0..n] are available; assumes mu held.
  void ensure(long n) {
    long old = static_cast<long>(p.size());
    if (n < old) return;
    p.resize(static_cast<size_t>(n) + 1);
    for (long m = old; m <= n; ++m) {
      Int acc = 0;
      for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > m && g2 > m) break;
        bool plus = (k % 2 == 1);
        if (g1 <= m) acc += plus ? p[static_cast<size_t>(m - g1)] : -p[static_cast<size_t>(m - g1)];
        if (g2 <= m) acc += plus ? p[static_cast<size_t>(m - g2)] : -p[static_cast<size_t>(m - g2)];
      }
      p[static_cast<size_t>(m)] = acc;
    }
  }
};

inline PartitionTable& partition_table() {
  static PartitionTable t;
  return t;
}
}  // namespace detail

// p(n); p of a negative integer is 0.
inline Int partition(long n) {
  if (n < 0) return Int(0);
  auto& t = detail::partition_table();
  std::lock_guard<std::mutex> lock(t.mu);
  t.ensure(n);
  return t.p[static_cast<size_t>(n)];
}

// p(x) with the convention p(x) = 0 for non-integral x.
inline Int partition(const Rat& x) {
  if (!rat_is_integer(x)) return Int(0);
  Int n = x.get_num();
  if (n < 0) return Int(0);
  if (!n.fits_slong_p()) throw std::invalid_argument("partition: argument too large");
  return partition(n.get_si());
}

}  // namespace qseries
