#pragma once

// Builders for the classical q-series the identity registry is written in:
// Pochhammer products, eta quotients, theta series, generalized eta products,
// Eisenstein series (classical and character-twisted), binary-quadratic-form
// theta series and partition-progression generating functions.

#include <cmath>
#include <utility>
#include <vector>

#include "qseries/arith.hpp"
#include "qseries/partition.hpp"
#include "qseries/series.hpp"

namespace qseries {

// Shift every exponent by the rational delta (exact regrading, precision
// moves with it).
inline PuiseuxSeries series_shift(const PuiseuxSeries& a, const Rat& delta) {
  long dd = static_cast<long>(delta.get_den().get_si());
  long dn = static_cast<long>(delta.get_num().get_si());
  long s = lcm_long(a.scale, dd);
  PuiseuxSeries r(a.prec + delta);
  r.scale = s;
  long fa = s / a.scale, fd = s / dd;
  for (const auto& [i, v] : a.c) r.c.emplace(i * fa + dn * fd, v);
  r.normalize();
  return r;
}

inline PuiseuxSeries series_from_terms(const std::vector<std::pair<Rat, Rat>>& terms, Rat prec) {
  long s = 1;
  for (const auto& [e, v] : terms) s = lcm_long(s, static_cast<long>(e.get_den().get_si()));
  PuiseuxSeries r(std::move(prec));
  r.scale = s;
  for (const auto& [e, v] : terms) {
    if (v == 0 || e >= r.prec) continue;
    Rat idx = e * s;
    r.c[static_cast<long>(idx.get_num().get_si())] += v;
  }
  r.normalize();
  return r;
}

// (sgn_adjusted Pochhammer)  poch(a, b, sgn) = prod_{j>=0} (1 + sgn q^{a+jb}),
// i.e. sgn=-1 gives (q^a; q^b)_infty and sgn=+1 gives (-q^a; q^b)_infty.
inline PuiseuxSeries pochhammer(const Rat& a, const Rat& b, int sgn, const Rat& prec) {
  if (a <= 0 || b <= 0) throw SeriesError("pochhammer: need a > 0, b > 0");
  if (sgn != 1 && sgn != -1) throw SeriesError("pochhammer: sign must be +-1");
  long s = lcm_long(static_cast<long>(a.get_den().get_si()),
                    static_cast<long>(b.get_den().get_si()));
  Int hi_bound = rat_ceil(prec * s);
  if (!hi_bound.fits_slong_p()) throw SeriesError("pochhammer: precision bound overflow");
  long hi = std::max(hi_bound.get_si(), 1L);
  long A = static_cast<long>(Rat(a * s).get_num().get_si());
  long B = static_cast<long>(Rat(b * s).get_num().get_si());
  std::vector<Rat> v(static_cast<size_t>(hi));
  v[0] = 1;
  for (long e = A; e < hi; e += B) {
    // multiply in place by (1 + sgn q^{e/s})
    for (long i = hi - 1; i >= e; --i) {
      if (v[static_cast<size_t>(i - e)] == 0) continue;
      if (sgn > 0)
        v[static_cast<size_t>(i)] += v[static_cast<size_t>(i - e)];
      else
        v[static_cast<size_t>(i)] -= v[static_cast<size_t>(i - e)];
    }
  }
  PuiseuxSeries r(prec);
  r.scale = s;
  for (long i = 0; i < hi; ++i)
    if (v[static_cast<size_t>(i)] != 0) r.c.emplace(i, std::move(v[static_cast<size_t>(i)]));
  r.normalize();
  return r;
}

// eta(r tau)^e = q^{re/24} (q^r;q^r)_infty^e, integer e (negative allowed).
inline PuiseuxSeries eta_power(long r, long e, const Rat& prec) {
  if (r <= 0) throw SeriesError("eta_power: need r > 0");
  if (e == 0) return PuiseuxSeries::constant(Rat(1), prec);
  Rat shift = make_rat(r * e, 24);
  // Build the Pochhammer part to enough precision that the shifted result
  // still covers [lo, prec).
  Rat body_prec = prec - shift;
  if (body_prec <= 0) body_prec = Rat(1);
  PuiseuxSeries body = series_pow(pochhammer(Rat(r), Rat(r), -1, body_prec), e);
  return series_shift(body, shift);
}

// Product of eta powers, one (r, e) pair per factor.
inline PuiseuxSeries eta_quotient(const std::vector<std::pair<long, long>>& factors,
                                  const Rat& prec) {
  // Assemble the total fractional shift first so each factor is built at the
  // precision that survives the final regrading.
  Rat shift = 0;
  for (const auto& [r, e] : factors) shift += make_rat(r * e, 24);
  Rat body_prec = prec - shift;
  if (body_prec <= 0) body_prec = Rat(1);
  PuiseuxSeries body = PuiseuxSeries::constant(Rat(1), body_prec);
  for (const auto& [r, e] : factors) {
    if (r <= 0) throw SeriesError("eta_quotient: need r > 0");
    if (e == 0) continue;
    body = series_mul(body, series_pow(pochhammer(Rat(r), Rat(r), -1, body_prec), e));
  }
  return series_shift(body, shift);
}

// Theta_2(q^r) = sum_j q^{r (j+1/2)^2}  and  Theta_3(q^r) = sum_j q^{r j^2}.
inline PuiseuxSeries theta(int kind, const Rat& r, const Rat& prec) {
  if (r <= 0) throw SeriesError("theta: need r > 0");
  std::vector<std::pair<Rat, Rat>> terms;
  if (kind == 3) {
    terms.emplace_back(Rat(0), Rat(1));
    for (long j = 1;; ++j) {
      Rat e = r * j * j;
      if (e >= prec) break;
      terms.emplace_back(e, Rat(2));
    }
  } else if (kind == 2) {
    for (long j = 0;; ++j) {
      Rat e = r * (2 * j + 1) * (2 * j + 1) / 4;
      if (e >= prec) break;
      terms.emplace_back(e, Rat(2));
    }
  } else {
    throw SeriesError("theta: kind must be 2 or 3");
  }
  return series_from_terms(terms, prec);
}

// Ramanujan-style theta  f(q^x, q^y) = (-q^x; q^{x+y}) (-q^y; q^{x+y}) (q^{x+y}; q^{x+y}).
inline PuiseuxSeries jacobi_f(const Rat& x, const Rat& y, const Rat& prec) {
  if (x <= 0 || y <= 0) throw SeriesError("jacobi_f: need x > 0, y > 0");
  Rat xy = x + y;
  return series_mul(series_mul(pochhammer(x, xy, 1, prec), pochhammer(y, xy, 1, prec)),
                    pochhammer(xy, xy, -1, prec));
}

// Generalized eta product
//   E_a = q^{L B2(a/L)/2} prod_{m>=1} (1 - q^{L(m-1)+a})(1 - q^{Lm-a}),
// B2(x) = x^2 - x + 1/6.  Indices outside (0, L) reduce by E_{a+L} = -E_a and
// E_{-a} = -E_a, i.e. E_a = (-1)^{floor(a/L)} E_{a mod L}; a == 0 (mod L) is
// invalid.
inline PuiseuxSeries gen_eta(long L, long a, const Rat& prec) {
  if (L <= 0) throw SeriesError("gen_eta: need L > 0");
  long t = floor_div(a, L);
  long r = a - t * L;
  if (r == 0) throw SeriesError("gen_eta: index divisible by the level");
  Rat x = make_rat(r, L);
  Rat shift = Rat(L) * (x * x - x + make_rat(1, 6)) / 2;
  Rat body_prec = prec - shift;
  if (body_prec <= 0) body_prec = Rat(1);
  PuiseuxSeries body = series_mul(pochhammer(Rat(r), Rat(L), -1, body_prec),
                                  pochhammer(Rat(L - r), Rat(L), -1, body_prec));
  PuiseuxSeries res = series_shift(body, shift);
  return (t % 2 == 0) ? res : series_neg(res);
}

// Classical Eisenstein series at q^r: E2 = 1 - 24 sum sigma_1(n) q^{rn},
// E4 = 1 + 240 sum sigma_3(n) q^{rn}.
inline PuiseuxSeries eisenstein(int weight, long r, const Rat& prec) {
  if (r <= 0) throw SeriesError("eisenstein: need r > 0");
  long mult;
  unsigned w;
  if (weight == 2) {
    mult = -24;
    w = 1;
  } else if (weight == 4) {
    mult = 240;
    w = 3;
  } else {
    throw SeriesError("eisenstein: weight must be 2 or 4");
  }
  PuiseuxSeries s(prec);
  if (s.prec > 0) s.c[0] = 1;
  for (long n = 1; Rat(r) * n < prec; ++n) s.c[r * n] = mult * Rat(sigma(n, w));
  s.normalize();
  return s;
}

enum class TwistSide {
  Divisor,    // sum_n ( sum_{d|n} chi(d) (n/d)^w ) q^n   — chi twists the divisor,
              //   the power falls on the codivisor (Lambert: sum chi(j) j-free forms)
  Codivisor,  // sum_n ( sum_{d|n} chi(d) d^w ) q^n        — chi and the power ride
              //   the same element, the codivisor index runs free
  Index,      // sum_n chi(n) sigma_w(n) q^n               — chi twists the full index
};

// Character-twisted Eisenstein-type sum with chi = Kronecker (d_char / .).
// No constant term; affine combinations (1 - (7/8) * ..., etc.) are assembled
// by the caller.  w = 0 is allowed (pure character Lambert series).
inline PuiseuxSeries twisted_eisenstein(long d_char, unsigned w, TwistSide side, const Rat& prec) {
  PuiseuxSeries s(prec);
  Int n_bound = rat_ceil(prec);
  if (!n_bound.fits_slong_p()) throw SeriesError("twisted_eisenstein: bound overflow");
  for (long n = 1; n < n_bound.get_si(); ++n) {
    if (Rat(n) >= prec) break;
    Int coeff = 0;
    if (side == TwistSide::Index) {
      int chi = kronecker(d_char, n);
      if (chi != 0) coeff = chi * sigma(n, w);
    } else {
      for (long d : divisors(n)) {
        int chi = kronecker(d_char, d);
        if (chi == 0) continue;
        Int pw;
        unsigned long base =
            static_cast<unsigned long>(side == TwistSide::Divisor ? n / d : d);
        mpz_ui_pow_ui(pw.get_mpz_t(), base, w);
        coeff += chi * pw;
      }
    }
    if (coeff != 0) s.c[n] = Rat(coeff);
  }
  s.normalize();
  return s;
}

// sum_{j>=1} p(ell j - c) q^j.
inline PuiseuxSeries partition_progression(long ell, long c, const Rat& prec) {
  if (ell <= 0) throw SeriesError("partition_progression: need ell > 0");
  PuiseuxSeries s(prec);
  for (long j = 1; Rat(j) < prec; ++j) {
    Int v = partition(ell * j - c);
    if (v != 0) s.c[j] = Rat(v);
  }
  s.normalize();
  return s;
}

// Theta series of the positive-definite binary form a m^2 + b m n + c n^2.
inline PuiseuxSeries binary_qf_theta(long a, long b, long cc, const Rat& prec) {
  if (a <= 0 || 4 * a * cc - b * b <= 0)
    throw SeriesError("binary_qf_theta: form must be positive definite");
  PuiseuxSeries s(prec);
  Int bound = rat_ceil(prec);
  if (!bound.fits_slong_p()) throw SeriesError("binary_qf_theta: bound overflow");
  long P = bound.get_si();
  // 4a Q(m,n) = (2am + bn)^2 + (4ac - b^2) n^2, so |n| <= sqrt(4aP / (4ac-b^2)).
  long disc = 4 * a * cc - b * b;
  long n_max = 0;
  while (disc * (n_max + 1) * (n_max + 1) <= 4 * a * P) ++n_max;
  for (long n = -n_max; n <= n_max; ++n) {
    // Solve a m^2 + (b n) m + (c n^2 - P) < 0 for the m window.
    double Bn = static_cast<double>(b) * n;
    double Cn = static_cast<double>(cc) * n * n - static_cast<double>(P);
    double disc2 = Bn * Bn - 4.0 * a * Cn;
    if (disc2 < 0) continue;
    double sq = std::sqrt(disc2);
    long mlo = static_cast<long>(std::floor((-Bn - sq) / (2.0 * a))) - 1;
    long mhi = static_cast<long>(std::ceil((-Bn + sq) / (2.0 * a))) + 1;
    for (long m = mlo; m <= mhi; ++m) {
      long q = a * m * m + b * m * n + cc * n * n;
      if (Rat(q) < prec) s.c[q] += 1;
    }
  }
  s.normalize();
  return s;
}

}  // namespace qseries
