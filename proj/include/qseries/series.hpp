#pragma once

// Truncated Laurent-Puiseux series over exact rationals.
//
// A series is stored as {scale s, prec P, coefficients c}: the term c[i]
// contributes c[i] * q^(i/s), and every coefficient of exponent e < P is
// known exactly (P is measured in q-units, not scaled indices).  Zero
// coefficients are never stored, and the scale is kept minimal: after every
// operation gcd(scale, all indices) == 1.  Finite principal parts (negative
// exponents) are allowed everywhere.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/arith.hpp"

namespace qseries {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requesting a coefficient at or beyond the known precision is a distinct
// failure mode from a coefficient that is genuinely zero.
struct OutOfPrecision : SeriesError {
  using SeriesError::SeriesError;
};

class PuiseuxSeries {
 public:
  long scale = 1;
  Rat prec = 0;
  std::map<long, Rat> c;  // scaled index -> nonzero coefficient

  PuiseuxSeries() = default;
  explicit PuiseuxSeries(Rat precision) : prec(std::move(precision)) {}

  static PuiseuxSeries zero(Rat prec) { return PuiseuxSeries(std::move(prec)); }

  static PuiseuxSeries constant(const Rat& v, Rat prec) {
    PuiseuxSeries s(std::move(prec));
    if (v != 0 && s.prec > 0) s.c[0] = v;
    return s;
  }

  // coeff * q^e, e rational.
  static PuiseuxSeries monomial(const Rat& e, const Rat& coeff, Rat prec) {
    PuiseuxSeries s(std::move(prec));
    if (coeff != 0 && Rat(e) < s.prec) {
      long den = static_cast<long>(e.get_den().get_si());
      long num = static_cast<long>(e.get_num().get_si());
      s.scale = den;
      s.c[num] = coeff;
    }
    s.normalize();
    return s;
  }

  bool is_zero() const { return c.empty(); }

  // Least stored exponent, in q-units (0 for the zero series).
  Rat lo_q() const {
    if (c.empty()) return Rat(0);
    return make_rat(c.begin()->first, scale);
  }

  // Restore the invariants: drop explicit zeros, reduce the scale.
  void normalize() {
    for (auto it = c.begin(); it != c.end();) {
      if (it->second == 0)
        it = c.erase(it);
      else
        ++it;
    }
    if (c.empty()) {
      scale = 1;
      return;
    }
    long g = scale;
    for (const auto& [i, v] : c) {
      g = gcd_long(g, i);
      if (g == 1) break;
    }
    if (g > 1) {
      std::map<long, Rat> nc;
      for (auto& [i, v] : c) nc.emplace(i / g, std::move(v));
      c = std::move(nc);
      scale /= g;
    }
  }

  // View this series on a coarser grid (s must be a multiple of scale).
  PuiseuxSeries with_scale(long s) const {
    if (s % scale != 0) throw SeriesError("with_scale: not a multiple of current scale");
    PuiseuxSeries r(prec);
    r.scale = s;
    long f = s / scale;
    for (const auto& [i, v] : c) r.c.emplace(i * f, v);
    return r;
  }

  // Exact coefficient of q^e; throws OutOfPrecision when e >= prec.
  Rat coefficient(const Rat& e) const {
    if (e >= prec) {
      std::ostringstream os;
      os << "coefficient at q^" << e.get_str() << " requested, series known only below q^"
         << prec.get_str();
      throw OutOfPrecision(os.str());
    }
    Rat idx = e * scale;
    if (!rat_is_integer(idx)) return Rat(0);
    Int i = idx.get_num();
    if (!i.fits_slong_p()) return Rat(0);
    auto it = c.find(i.get_si());
    return it == c.end() ? Rat(0) : it->second;
  }

  Rat coefficient(long e) const { return coefficient(Rat(e)); }

  int support_size() const { return static_cast<int>(c.size()); }
};

inline PuiseuxSeries series_add(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  long s = lcm_long(a.scale, b.scale);
  PuiseuxSeries r(std::min(a.prec, b.prec));
  r.scale = s;
  long fa = s / a.scale, fb = s / b.scale;
  for (const auto& [i, v] : a.c)
    if (make_rat(i * fa, s) < r.prec) r.c[i * fa] += v;
  for (const auto& [i, v] : b.c)
    if (make_rat(i * fb, s) < r.prec) r.c[i * fb] += v;
  r.normalize();
  return r;
}

inline PuiseuxSeries series_scalar_mul(const Rat& k, const PuiseuxSeries& a) {
  PuiseuxSeries r(a.prec);
  if (k == 0) return r;
  r.scale = a.scale;
  for (const auto& [i, v] : a.c) r.c[i] = k * v;
  r.normalize();
  return r;
}

inline PuiseuxSeries series_neg(const PuiseuxSeries& a) { return series_scalar_mul(Rat(-1), a); }

inline PuiseuxSeries series_sub(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return series_add(a, series_neg(b));
}

// Truncated product.  The result precision is
//   min(prec_a + lo_b, prec_b + lo_a)   (all in q-units),
// which reduces to min(prec_a, prec_b) when both factors start at q^0 and is
// sharp for factors with a leading monomial q^lo.
inline PuiseuxSeries series_mul(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  Rat rp = std::min(a.prec + b.lo_q(), b.prec + a.lo_q());
  PuiseuxSeries r(rp);
  if (a.is_zero() || b.is_zero()) return r;
  long s = lcm_long(a.scale, b.scale);
  long fa = s / a.scale, fb = s / b.scale;

  // Accumulate densely over the scaled index range [lo, hi).
  Int hi_bound = rat_ceil(rp * s);
  long lo = a.c.begin()->first * fa + b.c.begin()->first * fb;
  if (!hi_bound.fits_slong_p()) throw SeriesError("series_mul: precision bound overflow");
  long hi = hi_bound.get_si();
  if (hi <= lo) return r;
  std::vector<Rat> acc(static_cast<size_t>(hi - lo));
  for (const auto& [ia, va] : a.c) {
    long base = ia * fa;
    if (base + b.c.begin()->first * fb >= hi) break;
    for (const auto& [ib, vb] : b.c) {
      long idx = base + ib * fb;
      if (idx >= hi) break;
      acc[static_cast<size_t>(idx - lo)] += va * vb;
    }
  }
  r.scale = s;
  for (long i = lo; i < hi; ++i) {
    Rat& v = acc[static_cast<size_t>(i - lo)];
    if (v != 0) r.c.emplace(i, std::move(v));
  }
  r.normalize();
  return r;
}

// Multiplicative inverse.  Requires a nonzero leading term; the result starts
// at -lo and is known below prec - 2*lo (q-units).
inline PuiseuxSeries series_invert(const PuiseuxSeries& a) {
  if (a.is_zero()) throw SeriesError("series_invert: zero series");
  long s = a.scale;
  long L = a.c.begin()->first;
  const Rat& lead = a.c.begin()->second;
  // Unit part u = q^{-L/s} * a, scaled support from 0.
  Int known = rat_ceil(a.prec * s) - L;  // u's coefficients known below this index
  if (known <= 0) throw SeriesError("series_invert: no usable precision");
  if (!known.fits_slong_p()) throw SeriesError("series_invert: precision bound overflow");
  long n_known = known.get_si();

  std::vector<Rat> inv(static_cast<size_t>(n_known));
  inv[0] = 1 / lead;
  // inv[n] = -(sum_{0<k<=n} u_k inv_{n-k}) / u_0, iterating u's sparse support.
  std::vector<std::pair<long, Rat>> u;
  for (const auto& [i, v] : a.c) u.emplace_back(i - L, v);
  for (long n = 1; n < n_known; ++n) {
    Rat sum = 0;
    for (const auto& [k, v] : u) {
      if (k > n) break;
      if (k == 0) continue;
      if (inv[static_cast<size_t>(n - k)] != 0) sum += v * inv[static_cast<size_t>(n - k)];
    }
    if (sum != 0) inv[static_cast<size_t>(n)] = -sum / lead;
  }

  PuiseuxSeries r(a.prec - 2 * a.lo_q());
  r.scale = s;
  Int hi_bound = rat_ceil(r.prec * s);
  for (long n = 0; n < n_known; ++n) {
    if (inv[static_cast<size_t>(n)] == 0) continue;
    long idx = n - L;
    if (Int(idx) >= hi_bound) break;
    r.c.emplace(idx, std::move(inv[static_cast<size_t>(n)]));
  }
  r.normalize();
  return r;
}

// a^k for integer k (negative k via inversion, a^0 == 1).
inline PuiseuxSeries series_pow(const PuiseuxSeries& a, long k) {
  if (k == 0) return PuiseuxSeries::constant(Rat(1), a.prec);
  if (k < 0) return series_pow(series_invert(a), -k);
  PuiseuxSeries base = a;
  PuiseuxSeries result;
  bool have = false;
  long e = k;
  while (e > 0) {
    if (e & 1) {
      result = have ? series_mul(result, base) : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

// q -> q^r for rational r > 0 (exponents and precision both scale by r).
inline PuiseuxSeries substitute_power(const PuiseuxSeries& a, const Rat& r) {
  if (r <= 0) throw SeriesError("substitute_power: need r > 0");
  long rn = static_cast<long>(r.get_num().get_si());
  long rd = static_cast<long>(r.get_den().get_si());
  PuiseuxSeries out(a.prec * r);
  out.scale = a.scale * rd;
  for (const auto& [i, v] : a.c) out.c.emplace(i * rn, v);
  out.normalize();
  return out;
}

// Arithmetic-progression extraction: sum_n coeff(m n + r) q^n.
// Requires integer exponents (scale 1); r in [0, m).
inline PuiseuxSeries dissect(const PuiseuxSeries& a, long m, long r) {
  if (m <= 0 || r < 0 || r >= m) throw SeriesError("dissect: need m > 0, 0 <= r < m");
  if (a.scale != 1) throw SeriesError("dissect: series has fractional exponents");
  PuiseuxSeries out((a.prec - r) / m);
  for (const auto& [i, v] : a.c)
    if (floor_mod(i, m) == r) out.c.emplace(floor_div(i - r, m), v);
  out.normalize();
  return out;
}

// q -> -q on integer-exponent series: coeff(q^n) *= (-1)^n.
inline PuiseuxSeries alternate_sign(const PuiseuxSeries& a) {
  if (a.scale != 1) throw SeriesError("alternate_sign: series has fractional exponents");
  PuiseuxSeries out(a.prec);
  for (const auto& [i, v] : a.c) out.c.emplace(i, (floor_mod(i, 2) == 0) ? v : -v);
  out.normalize();
  return out;
}

struct Mismatch {
  Rat exponent;
  Rat lhs;
  Rat rhs;
};

struct CompareResult {
  Rat compared_up_to;               // both series known below this exponent
  std::optional<Mismatch> mismatch; // first differing coefficient, if any
  bool equal() const { return !mismatch.has_value(); }
};

// Compare coefficients up to min(prec_a, prec_b, bound) and report the first
// mismatch in exponent order.
inline CompareResult series_compare(const PuiseuxSeries& a, const PuiseuxSeries& b,
                                    std::optional<Rat> bound = std::nullopt) {
  Rat limit = std::min(a.prec, b.prec);
  if (bound && *bound < limit) limit = *bound;
  CompareResult res;
  res.compared_up_to = limit;
  long s = lcm_long(a.scale, b.scale);
  long fa = s / a.scale, fb = s / b.scale;
  std::map<long, std::pair<Rat, Rat>> merged;
  for (const auto& [i, v] : a.c)
    if (make_rat(i * fa, s) < limit) merged[i * fa].first = v;
  for (const auto& [i, v] : b.c)
    if (make_rat(i * fb, s) < limit) merged[i * fb].second = v;
  for (const auto& [i, pair] : merged) {
    if (pair.first != pair.second) {
      res.mismatch = Mismatch{make_rat(i, s), pair.first, pair.second};
      break;
    }
  }
  return res;
}

inline bool series_equal(const PuiseuxSeries& a, const PuiseuxSeries& b,
                         std::optional<Rat> bound = std::nullopt) {
  return series_compare(a, b, bound).equal();
}

// --- serialization -----------------------------------------------------
//
// Line-oriented text format:
//   scale <s> prec <p> lo <i>
//   <index> <coefficient>
//   ...
// with canonical GMP rational strings ("n" or "n/d").

inline std::string series_serialize(const PuiseuxSeries& a) {
  std::ostringstream os;
  os << "scale " << a.scale << " prec " << a.prec.get_str() << " lo "
     << (a.c.empty() ? 0 : a.c.begin()->first) << "\n";
  for (const auto& [i, v] : a.c) os << i << " " << v.get_str() << "\n";
  return os.str();
}

inline PuiseuxSeries series_deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string kw_scale, kw_prec, kw_lo, prec_str;
  long scale = 0, lo = 0;
  if (!(is >> kw_scale >> scale >> kw_prec >> prec_str >> kw_lo >> lo) || kw_scale != "scale" ||
      kw_prec != "prec" || kw_lo != "lo")
    throw SeriesError("series_deserialize: malformed header");
  if (scale <= 0) throw SeriesError("series_deserialize: bad scale");
  PuiseuxSeries r(parse_rat(prec_str));
  r.scale = scale;
  long idx;
  std::string coeff;
  while (is >> idx >> coeff) {
    Rat v = parse_rat(coeff);
    if (v == 0) throw SeriesError("series_deserialize: explicit zero coefficient");
    if (!r.c.emplace(idx, v).second) throw SeriesError("series_deserialize: duplicate index");
  }
  if (!is.eof() && is.fail()) {
    is.clear();
    std::string junk;
    if (is >> junk) throw SeriesError("series_deserialize: trailing junk: " + junk);
  }
  if (!r.c.empty() && r.c.begin()->first != lo)
    throw SeriesError("series_deserialize: header lo disagrees with body");
  PuiseuxSeries copy = r;
  copy.normalize();
  if (copy.scale != r.scale) throw SeriesError("series_deserialize: scale not minimal");
  return r;
}

}  // namespace qseries
