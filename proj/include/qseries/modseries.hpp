#pragma once

// Series over Z/M for congruence scans.  Mirrors the exact series type but
// with machine-word coefficients; every modulus used by the check registry is
// <= 729, so uint64 accumulators never overflow even across long
// convolutions.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qseries/arith.hpp"
#include "qseries/series.hpp"

namespace qseries {

class ModSeries {
 public:
  std::uint64_t modulus = 0;
  long scale = 1;
  Rat prec = 0;
  std::map<long, std::uint64_t> c;  // scaled index -> coefficient in [1, M)

  ModSeries() = default;
  ModSeries(std::uint64_t m, Rat precision) : modulus(m), prec(std::move(precision)) {
    if (m < 2) throw SeriesError("ModSeries: modulus must be >= 2");
  }

  static ModSeries constant(std::uint64_t v, std::uint64_t m, Rat prec) {
    ModSeries s(m, std::move(prec));
    if (s.prec > 0) s.set(0, v);
    return s;
  }

  bool is_zero() const { return c.empty(); }

  Rat lo_q() const {
    if (c.empty()) return Rat(0);
    return make_rat(c.begin()->first, scale);
  }

  void set(long idx, std::uint64_t v) {
    v %= modulus;
    if (v == 0)
      c.erase(idx);
    else
      c[idx] = v;
  }

  void normalize() {
    for (auto it = c.begin(); it != c.end();) {
      if (it->second % modulus == 0)
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
      std::map<long, std::uint64_t> nc;
      for (const auto& [i, v] : c) nc.emplace(i / g, v);
      c = std::move(nc);
      scale /= g;
    }
  }

  std::uint64_t coefficient(const Rat& e) const {
    if (e >= prec) {
      throw OutOfPrecision("ModSeries: coefficient at q^" + e.get_str() +
                           " beyond known precision " + prec.get_str());
    }
    Rat idx = e * scale;
    if (!rat_is_integer(idx)) return 0;
    Int i = idx.get_num();
    if (!i.fits_slong_p()) return 0;
    auto it = c.find(i.get_si());
    return it == c.end() ? 0 : it->second;
  }

  std::uint64_t coefficient(long e) const { return coefficient(Rat(e)); }
};

// Reduce an exact series mod M.  All coefficients must be integers.
inline ModSeries reduce_mod(const PuiseuxSeries& a, std::uint64_t m) {
  ModSeries r(m, a.prec);
  r.scale = a.scale;
  for (const auto& [i, v] : a.c) {
    if (!rat_is_integer(v))
      throw SeriesError("reduce_mod: non-integral coefficient " + v.get_str() + " at index " +
                        std::to_string(i));
    Int rem;
    mpz_fdiv_r_ui(rem.get_mpz_t(), v.get_num_mpz_t(), m);
    std::uint64_t u = rem.get_ui();
    if (u != 0) r.c.emplace(i, u);
  }
  r.normalize();
  return r;
}

inline void require_same_modulus(const ModSeries& a, const ModSeries& b) {
  if (a.modulus != b.modulus) throw SeriesError("mod series arithmetic across different moduli");
}

inline ModSeries mod_add(const ModSeries& a, const ModSeries& b) {
  require_same_modulus(a, b);
  long s = lcm_long(a.scale, b.scale);
  ModSeries r(a.modulus, std::min(a.prec, b.prec));
  r.scale = s;
  long fa = s / a.scale, fb = s / b.scale;
  for (const auto& [i, v] : a.c)
    if (make_rat(i * fa, s) < r.prec) r.c[i * fa] = (r.c[i * fa] + v) % r.modulus;
  for (const auto& [i, v] : b.c)
    if (make_rat(i * fb, s) < r.prec) r.c[i * fb] = (r.c[i * fb] + v) % r.modulus;
  r.normalize();
  return r;
}

inline ModSeries mod_scalar_mul(std::uint64_t k, const ModSeries& a) {
  ModSeries r(a.modulus, a.prec);
  k %= a.modulus;
  if (k == 0) return r;
  r.scale = a.scale;
  for (const auto& [i, v] : a.c) {
    std::uint64_t u = (v * k) % a.modulus;
    if (u != 0) r.c.emplace(i, u);
  }
  r.normalize();
  return r;
}

inline ModSeries mod_neg(const ModSeries& a) { return mod_scalar_mul(a.modulus - 1, a); }

inline ModSeries mod_sub(const ModSeries& a, const ModSeries& b) {
  return mod_add(a, mod_neg(b));
}

inline ModSeries mod_mul(const ModSeries& a, const ModSeries& b) {
  require_same_modulus(a, b);
  Rat rp = std::min(a.prec + b.lo_q(), b.prec + a.lo_q());
  ModSeries r(a.modulus, rp);
  if (a.is_zero() || b.is_zero()) return r;
  long s = lcm_long(a.scale, b.scale);
  long fa = s / a.scale, fb = s / b.scale;
  Int hi_bound = rat_ceil(rp * s);
  long lo = a.c.begin()->first * fa + b.c.begin()->first * fb;
  if (!hi_bound.fits_slong_p()) throw SeriesError("mod_mul: precision bound overflow");
  long hi = hi_bound.get_si();
  if (hi <= lo) return r;
  // (M-1)^2 < 2^20 for M <= 729; a million-term accumulation stays below 2^63,
  // so reduce only once per output coefficient.
  std::vector<std::uint64_t> acc(static_cast<size_t>(hi - lo), 0);
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
    std::uint64_t v = acc[static_cast<size_t>(i - lo)] % r.modulus;
    if (v != 0) r.c.emplace(i, v);
  }
  r.normalize();
  return r;
}

inline std::uint64_t mod_unit_inverse(std::uint64_t a, std::uint64_t m) {
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
  while (newr != 0) {
    long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw SeriesError("mod inverse: leading coefficient not a unit mod M");
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

// Inverse mod M; the leading coefficient must be a unit mod M (all series we
// invert in congruence checks lead with 1).
inline ModSeries mod_invert(const ModSeries& a) {
  if (a.is_zero()) throw SeriesError("mod_invert: zero series");
  long s = a.scale;
  long L = a.c.begin()->first;
  std::uint64_t m = a.modulus;
  std::uint64_t lead_inv = mod_unit_inverse(a.c.begin()->second, m);
  Int known = rat_ceil(a.prec * s) - L;
  if (known <= 0) throw SeriesError("mod_invert: no usable precision");
  if (!known.fits_slong_p()) throw SeriesError("mod_invert: precision bound overflow");
  long n_known = known.get_si();

  std::vector<std::uint64_t> inv(static_cast<size_t>(n_known), 0);
  inv[0] = lead_inv % m;
  std::vector<std::pair<long, std::uint64_t>> u;
  for (const auto& [i, v] : a.c) u.emplace_back(i - L, v);
  for (long n = 1; n < n_known; ++n) {
    std::uint64_t sum = 0;
    for (const auto& [k, v] : u) {
      if (k > n) break;
      if (k == 0) continue;
      sum += v * inv[static_cast<size_t>(n - k)];
    }
    sum %= m;
    if (sum != 0) inv[static_cast<size_t>(n)] = (m - sum) * lead_inv % m;
  }

  ModSeries r(m, a.prec - 2 * a.lo_q());
  r.scale = s;
  Int hi_bound = rat_ceil(r.prec * s);
  for (long n = 0; n < n_known; ++n) {
    if (inv[static_cast<size_t>(n)] == 0) continue;
    long idx = n - L;
    if (Int(idx) >= hi_bound) break;
    r.c.emplace(idx, inv[static_cast<size_t>(n)]);
  }
  r.normalize();
  return r;
}

inline ModSeries mod_pow(const ModSeries& a, long k) {
  if (k == 0) {
    ModSeries r(a.modulus, a.prec);
    if (r.prec > 0) r.c[0] = 1 % a.modulus;
    return r;
  }
  if (k < 0) return mod_pow(mod_invert(a), -k);
  ModSeries base = a, result;
  bool have = false;
  long e = k;
  while (e > 0) {
    if (e & 1) {
      result = have ? mod_mul(result, base) : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = mod_mul(base, base);
  }
  return result;
}

inline ModSeries mod_substitute_power(const ModSeries& a, const Rat& r) {
  if (r <= 0) throw SeriesError("mod_substitute_power: need r > 0");
  long rn = static_cast<long>(r.get_num().get_si());
  long rd = static_cast<long>(r.get_den().get_si());
  ModSeries out(a.modulus, a.prec * r);
  out.scale = a.scale * rd;
  for (const auto& [i, v] : a.c) out.c.emplace(i * rn, v);
  out.normalize();
  return out;
}

inline ModSeries mod_dissect(const ModSeries& a, long m, long r) {
  if (m <= 0 || r < 0 || r >= m) throw SeriesError("mod_dissect: need m > 0, 0 <= r < m");
  if (a.scale != 1) throw SeriesError("mod_dissect: series has fractional exponents");
  ModSeries out(a.modulus, (a.prec - r) / m);
  for (const auto& [i, v] : a.c)
    if (floor_mod(i, m) == r) out.c.emplace(floor_div(i - r, m), v);
  out.normalize();
  return out;
}

inline ModSeries mod_alternate_sign(const ModSeries& a) {
  if (a.scale != 1) throw SeriesError("mod_alternate_sign: series has fractional exponents");
  ModSeries out(a.modulus, a.prec);
  for (const auto& [i, v] : a.c)
    out.c.emplace(i, (floor_mod(i, 2) == 0) ? v : (a.modulus - v) % a.modulus);
  out.normalize();
  return out;
}

struct ModMismatch {
  Rat exponent;
  std::uint64_t lhs;
  std::uint64_t rhs;
};

struct ModCompareResult {
  Rat compared_up_to;
  std::optional<ModMismatch> mismatch;
  bool equal() const { return !mismatch.has_value(); }
};

inline ModCompareResult mod_compare(const ModSeries& a, const ModSeries& b,
                                    std::optional<Rat> bound = std::nullopt) {
  require_same_modulus(a, b);
  Rat limit = std::min(a.prec, b.prec);
  if (bound && *bound < limit) limit = *bound;
  ModCompareResult res;
  res.compared_up_to = limit;
  long s = lcm_long(a.scale, b.scale);
  long fa = s / a.scale, fb = s / b.scale;
  std::map<long, std::pair<std::uint64_t, std::uint64_t>> merged;
  for (const auto& [i, v] : a.c)
    if (make_rat(i * fa, s) < limit) merged[i * fa].first = v;
  for (const auto& [i, v] : b.c)
    if (make_rat(i * fb, s) < limit) merged[i * fb].second = v;
  for (const auto& [i, pair] : merged) {
    if (pair.first != pair.second) {
      res.mismatch = ModMismatch{make_rat(i, s), pair.first, pair.second};
      break;
    }
  }
  return res;
}

}  // namespace qseries
