#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

using Int = mpz_class;
using Rat = mpq_class;

// Exact rational from a numerator/denominator pair (mpq_class(n,d) does not
// canonicalize on its own).
inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

inline long gcd_long(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }
inline long lcm_long(long a, long b) { return std::lcm(std::abs(a), std::abs(b)); }

// Floored division/remainder (remainder always in [0, m)).
inline long floor_div(long a, long m) {
  long q = a / m, r = a % m;
  if (r != 0 && ((r < 0) != (m < 0))) --q;
  return q;
}
inline long floor_mod(long a, long m) { return a - m * floor_div(a, m); }

// Kronecker symbol (d/n), full Kronecker conventions.
inline int kronecker(long d, long n) {
  Int top(d), bot(n);
  return mpz_kronecker(top.get_mpz_t(), bot.get_mpz_t());
}

inline std::vector<long> divisors(long n) {
  if (n <= 0) throw std::invalid_argument("divisors: need n > 0");
  std::vector<long> small, big;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) big.push_back(n / d);
    }
  }
  for (auto it = big.rbegin(); it != big.rend(); ++it) small.push_back(*it);
  return small;
}

inline int mobius(long n) {
  if (n <= 0) throw std::invalid_argument("mobius: need n > 0");
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

// sigma_w(n) = sum of w-th powers of divisors.
inline Int sigma(long n, unsigned w) {
  Int s = 0;
  for (long d : divisors(n)) {
    Int dw;
    mpz_ui_pow_ui(dw.get_mpz_t(), static_cast<unsigned long>(d), w);
    s += dw;
  }
  return s;
}

}  // namespace qseries
