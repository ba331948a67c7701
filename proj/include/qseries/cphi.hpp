#pragma once

// Generating functions of k-colored generalized Frobenius partitions.
//
//   A_k(q)   = sum_{m in Z^{k-1}} q^{Q(m)},  Q = sum m_i^2 + sum_{i<j} m_i m_j
//            = (1/2) sum m_i^2 + (1/2) (sum m_i)^2
//   CPhi_k(q) = A_k(q) / (q;q)_infty^k
//
// Two independent production routes compute A_k:
//   * constant-term (CT): A_k = CT_z [ (sum_n z^n x^{n^2})^k ] with x = q^{1/2}
//     (k copies because Q on Z^{k-1} is the restriction of (1/2) sum_{i<=k} m_i^2
//     to the hyperplane sum m_i = 0);
//   * direct lattice enumeration over Z^{k-1} (reference route, small k only).
// They share no code.  The CT kernel is templated so congruence scans can run
// natively in Z/M.
//
// Also here: the dual-lattice theta B_ell (Gram matrix ell * A_{ell-1}^{-1}),
// the refined two-variable table cphi_k(m, n) via the bivariate constant-term
// product CT_z prod_j (z t^j q; q)_infty (z^{-1} t^{-j}; q)_infty, and the
// modular-function triple f_ell / g_ell / h_ell.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "qseries/builders.hpp"
#include "qseries/modseries.hpp"
#include "qseries/partition.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class ThetaMethod { ConstantTerm, Lattice };

namespace detail {

// Cheapest way to reach total displacement d with r integer steps, paying
// n^2 per step of size n: split d into r near-equal parts.
inline long cancel_cost(long d, long r) {
  d = std::abs(d);
  if (r <= 0) return d == 0 ? 0 : -1;  // -1: impossible
  long c = d / r, rem = d % r;
  return (r - rem) * c * c + rem * (c + 1) * (c + 1);
}

// One multiplication by Theta(z, x) = sum_n z^n x^{n^2}, exploiting the
// z <-> 1/z symmetry of every partial power (only slots d >= 0 are stored).
// state[d] is a dense array over x-exponents < X (empty vector = dead slot).
template <class T, class ReduceFn>
void ct_step(std::vector<std::vector<T>>& state, long X, long remaining_after,
             ReduceFn&& reduce) {
  long n_max = static_cast<long>(std::sqrt(static_cast<double>(X)));
  while (n_max * n_max >= X) --n_max;
  long d_old_max = static_cast<long>(state.size()) - 1;
  long d_new_max = d_old_max + n_max;
  std::vector<std::vector<T>> next(static_cast<size_t>(d_new_max) + 1);
  std::vector<long> old_lo(state.size(), X);
  for (size_t d = 0; d < state.size(); ++d) {
    const auto& v = state[d];
    for (long e = 0; e < static_cast<long>(v.size()); ++e)
      if (!(v[static_cast<size_t>(e)] == 0)) {
        old_lo[d] = e;
        break;
      }
  }
  for (long d = 0; d <= d_new_max; ++d) {
    // Skip slots that cannot return to z-degree 0 within the x-truncation.
    long lo_estimate = X;
    for (long n = -n_max; n <= n_max; ++n) {
      long m = std::abs(d - n);
      if (m > d_old_max || state[static_cast<size_t>(m)].empty()) continue;
      long cand = old_lo[static_cast<size_t>(m)] + n * n;
      if (cand < lo_estimate) lo_estimate = cand;
    }
    if (lo_estimate >= X) continue;
    long cancel = cancel_cost(d, remaining_after);
    if (cancel < 0 || lo_estimate + cancel >= X) continue;

    auto& out = next[static_cast<size_t>(d)];
    out.assign(static_cast<size_t>(X), T(0));
    for (long n = -n_max; n <= n_max; ++n) {
      long m = std::abs(d - n);
      if (m > d_old_max) continue;
      const auto& src = state[static_cast<size_t>(m)];
      if (src.empty()) continue;
      long shift = n * n;
      for (long e = old_lo[static_cast<size_t>(m)]; e + shift < X; ++e)
        if (!(src[static_cast<size_t>(e)] == 0))
          out[static_cast<size_t>(e + shift)] += src[static_cast<size_t>(e)];
    }
    bool any = false;
    for (auto& x : out) {
      reduce(x);
      if (!(x == 0)) any = true;
    }
    if (!any) out.clear();
  }
  state = std::move(next);
}

template <class T, class ReduceFn>
std::vector<T> frobenius_theta_ct_core(long k, long X, ReduceFn&& reduce) {
  if (k < 1) throw SeriesError("frobenius_theta: need k >= 1");
  if (X < 1) throw SeriesError("frobenius_theta: need positive precision");
  // State after the first factor: slot n holds x^{n^2}.
  std::vector<std::vector<T>> state;
  long n_max = static_cast<long>(std::sqrt(static_cast<double>(X)));
  while (n_max * n_max >= X) --n_max;
  state.resize(static_cast<size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    if (cancel_cost(n, k - 1) < 0 || n * n + cancel_cost(n, k - 1) >= X) continue;
    state[static_cast<size_t>(n)].assign(static_cast<size_t>(X), T(0));
    state[static_cast<size_t>(n)][static_cast<size_t>(n * n)] = T(1);
  }
  for (long j = 2; j <= k; ++j) ct_step(state, X, k - j, reduce);
  if (state.empty() || state[0].empty()) return std::vector<T>(static_cast<size_t>(X), T(0));
  // The constant term lives on integer q-exponents: odd x-entries must vanish.
  for (long e = 1; e < X; e += 2)
    if (!(state[0][static_cast<size_t>(e)] == 0))
      throw SeriesError("frobenius_theta: internal parity violation");
  return std::move(state[0]);
}

}  // namespace detail

// A_k by the constant-term route, exact integer coefficients.
inline PuiseuxSeries frobenius_theta_ct(long k, const Rat& prec) {
  Int Xb = rat_ceil(prec * 2);
  if (!Xb.fits_slong_p()) throw SeriesError("frobenius_theta_ct: precision overflow");
  long X = Xb.get_si();
  auto dense = detail::frobenius_theta_ct_core<Int>(k, X, [](Int&) {});
  PuiseuxSeries r(prec);
  r.scale = 2;
  for (long e = 0; e < X; e += 2)
    if (dense[static_cast<size_t>(e)] != 0 && make_rat(e, 2) < prec)
      r.c.emplace(e, Rat(dense[static_cast<size_t>(e)]));
  r.normalize();
  return r;
}

// A_k mod M by the same kernel running natively in Z/M.
inline ModSeries frobenius_theta_ct_mod(long k, const Rat& prec, std::uint64_t modulus) {
  Int Xb = rat_ceil(prec * 2);
  if (!Xb.fits_slong_p()) throw SeriesError("frobenius_theta_ct_mod: precision overflow");
  long X = Xb.get_si();
  auto dense = detail::frobenius_theta_ct_core<std::uint64_t>(
      k, X, [modulus](std::uint64_t& v) { v %= modulus; });
  ModSeries r(modulus, prec);
  r.scale = 2;
  for (long e = 0; e < X; e += 2) {
    std::uint64_t v = dense[static_cast<size_t>(e)] % modulus;
    if (v != 0 && make_rat(e, 2) < prec) r.c.emplace(e, v);
  }
  r.normalize();
  return r;
}

namespace detail {

// Reference route: depth-first enumeration of Z^{k-1} under
// Q = (1/2)(sum m_i^2) + (1/2)(sum m_i)^2 < prec, with an exact completion
// bound mu(S, r) = min_x [ cancel_cost(x, r) + (S + x)^2 ].
inline long lattice_mu(long S, long r) {
  if (r == 0) return S * S;
  long lo = std::min(-S, 0L) - r - 1, hi = std::max(-S, 0L) + r + 1;
  long best = -1;
  for (long x = lo; x <= hi; ++x) {
    long cc = cancel_cost(x, r);
    if (cc < 0) continue;
    long val = cc + (S + x) * (S + x);
    if (best < 0 || val < best) best = val;
  }
  return best;
}

inline void lattice_dfs(long coords_left, long A, long S, long two_prec,
                        std::vector<Int>& acc) {
  if (coords_left == 0) {
    long q2 = A + S * S;  // 2Q
    if (q2 < two_prec) acc[static_cast<size_t>(q2 / 2)] += 1;
    return;
  }
  long M = 0;
  while ((M + 1) * (M + 1) <= two_prec) ++M;
  for (long m = -M - std::abs(S); m <= M + std::abs(S); ++m) {
    long A2 = A + m * m, S2 = S + m;
    if (A2 + lattice_mu(S2, coords_left - 1) >= two_prec) continue;
    lattice_dfs(coords_left - 1, A2, S2, two_prec, acc);
  }
}

}  // namespace detail

// A_k by direct lattice enumeration (independent of the CT kernel; intended
// for cross-validation at small k).
inline PuiseuxSeries frobenius_theta_lattice(long k, const Rat& prec) {
  if (k < 1) throw SeriesError("frobenius_theta_lattice: need k >= 1");
  Int Pb = rat_ceil(prec);
  if (!Pb.fits_slong_p() || Pb.get_si() > 100000)
    throw SeriesError("frobenius_theta_lattice: precision out of supported range");
  long P = std::max(Pb.get_si(), 0L);
  std::vector<Int> acc(static_cast<size_t>(P), Int(0));
  if (P > 0) detail::lattice_dfs(k - 1, 0, 0, 2 * P, acc);
  PuiseuxSeries r(prec);
  for (long n = 0; n < P; ++n)
    if (acc[static_cast<size_t>(n)] != 0 && Rat(n) < prec) r.c.emplace(n, Rat(acc[static_cast<size_t>(n)]));
  r.normalize();
  return r;
}

inline PuiseuxSeries frobenius_theta(long k, const Rat& prec,
                                     ThetaMethod method = ThetaMethod::ConstantTerm) {
  return method == ThetaMethod::ConstantTerm ? frobenius_theta_ct(k, prec)
                                             : frobenius_theta_lattice(k, prec);
}

// CPhi_k = A_k / (q;q)_infty^k, exact.
inline PuiseuxSeries cphi_series(long k, const Rat& prec,
                                 ThetaMethod method = ThetaMethod::ConstantTerm) {
  PuiseuxSeries a = frobenius_theta(k, prec, method);
  PuiseuxSeries euler_inv = series_invert(pochhammer(Rat(1), Rat(1), -1, prec));
  return series_mul(a, series_pow(euler_inv, k));
}

// CPhi_k mod M (CT kernel in Z/M, Euler factor reduced then inverted mod M).
inline ModSeries cphi_series_mod(long k, const Rat& prec, std::uint64_t modulus) {
  ModSeries a = frobenius_theta_ct_mod(k, prec, modulus);
  ModSeries euler = reduce_mod(pochhammer(Rat(1), Rat(1), -1, prec), modulus);
  return mod_mul(a, mod_pow(euler, -k));
}

// cphi_k(n) as a single exact integer.
inline Int cphi(long k, long n, ThetaMethod method = ThetaMethod::ConstantTerm) {
  if (n < 0) return Int(0);
  Rat v = cphi_series(k, Rat(n + 1), method).coefficient(n);
  if (!rat_is_integer(v)) throw SeriesError("cphi: non-integral coefficient (internal error)");
  return v.get_num();
}

// ---------------------------------------------------------------------------
// Dual-lattice theta B_ell: Gram matrix ell * A_{ell-1}^{-1}, i.e.
//   B_ell = sum_{m in Z^{ell-1}} q^{Q'(m)},
//   Q' = (1/2)( ell sum m_i^2 - (sum m_i)^2 ).
// DFS with the Cauchy-Schwarz prefix bound
//   Q' >= (ell/2) (sq_t - s_t^2 / (t+1))  after t coordinates.
// ---------------------------------------------------------------------------

namespace detail {

inline void dual_theta_dfs(long ell, long t, long dims, long sq, long s, long two_prec,
                           std::map<long, Int>& acc) {
  if (t == dims) {
    long q2 = ell * sq - s * s;  // 2 Q'
    if (q2 < two_prec) acc[q2 / 2] += 1;
    return;
  }
  // Window for the next coordinate m from the prefix bound
  //   ell [ t' m^2 - 2 s m + (sq (t'+1) - s^2) ] < two_prec (t'+1),  t' = t+1.
  long tp = t + 1;
  double A = static_cast<double>(ell) * tp;
  double B = -2.0 * ell * s;
  double C = static_cast<double>(ell) * (static_cast<double>(sq) * (tp + 1) - static_cast<double>(s) * s) -
             static_cast<double>(two_prec) * (tp + 1);
  double disc = B * B - 4 * A * C;
  if (disc < 0) return;
  double root = std::sqrt(disc);
  long mlo = static_cast<long>(std::floor((-B - root) / (2 * A))) - 2;
  long mhi = static_cast<long>(std::ceil((-B + root) / (2 * A))) + 2;
  for (long m = mlo; m <= mhi; ++m) {
    long sq2 = sq + m * m, s2 = s + m;
    // Exact prefix bound: ell (sq2 (tp+1) - s2^2) < two_prec (tp+1).
    if (ell * (sq2 * (tp + 1) - s2 * s2) >= two_prec * (tp + 1)) continue;
    dual_theta_dfs(ell, tp, dims, sq2, s2, two_prec, acc);
  }
}

}  // namespace detail

inline PuiseuxSeries dual_theta(long ell, const Rat& prec) {
  if (ell < 2) throw SeriesError("dual_theta: need ell >= 2");
  Int Pb = rat_ceil(prec);
  if (!Pb.fits_slong_p() || Pb.get_si() > 100000)
    throw SeriesError("dual_theta: precision out of supported range");
  long P = std::max(Pb.get_si(), 0L);
  std::map<long, Int> acc;
  if (P > 0) detail::dual_theta_dfs(ell, 0, ell - 1, 0, 0, 2 * P, acc);
  PuiseuxSeries r(prec);
  for (const auto& [e, v] : acc)
    if (v != 0 && Rat(e) < prec) r.c.emplace(e, Rat(v));
  r.normalize();
  return r;
}

// ---------------------------------------------------------------------------
// Refined (two-variable) generating function:
//   sum_{m,n} cphi_k(m, n) t^m q^n
//     = CT_z [ prod_{j=1}^k (z t^j q; q)_infty (z^{-1} t^{-j}; q)_infty ],
// where m is the color difference.  Desk-scale trivariate expansion with the
// Euler z-order bounds (z^r costs q^{r(r+1)/2}, z^{-r} costs q^{r(r-1)/2}).
// ---------------------------------------------------------------------------

class BivariateTable {
 public:
  long k = 0;
  long n_max = -1;
  std::map<std::pair<long, long>, Int> counts;  // (m >= 0, n) -> cphi_k(m, n)

  // cphi_k(m, n); the table stores m >= 0 and mirrors on read.
  Int at(long m, long n) const {
    if (n < 0 || n > n_max) throw OutOfPrecision("BivariateTable: n out of range");
    auto it = counts.find({std::abs(m), n});
    return it == counts.end() ? Int(0) : it->second;
  }
};

namespace detail {

// Triple-indexed truncated polynomial: (z-degree, t-degree) -> dense q-poly.
using TriPoly = std::map<std::pair<long, long>, std::vector<Int>>;

inline void tri_add_term(TriPoly& p, long zd, long td, long qe, const Int& v, long n_max) {
  if (qe > n_max || v == 0) return;
  auto& vec = p[{zd, td}];
  if (vec.empty()) vec.assign(static_cast<size_t>(n_max) + 1, Int(0));
  vec[static_cast<size_t>(qe)] += v;
}

inline TriPoly tri_mul(const TriPoly& a, const TriPoly& b, long n_max, long z_cap) {
  TriPoly out;
  for (const auto& [ka, va] : a) {
    // least q-exponent present in va
    long lo_a = -1;
    for (long e = 0; e <= n_max; ++e)
      if (va[static_cast<size_t>(e)] != 0) {
        lo_a = e;
        break;
      }
    if (lo_a < 0) continue;
    for (const auto& [kb, vb] : b) {
      long zd = ka.first + kb.first;
      if (std::abs(zd) > z_cap) continue;
      long td = ka.second + kb.second;
      for (long ea = lo_a; ea <= n_max; ++ea) {
        const Int& ca = va[static_cast<size_t>(ea)];
        if (ca == 0) continue;
        for (long eb = 0; ea + eb <= n_max; ++eb) {
          const Int& cb = vb[static_cast<size_t>(eb)];
          if (cb == 0) continue;
          tri_add_term(out, zd, td, ea + eb, ca * cb, n_max);
        }
      }
    }
  }
  // drop all-zero slots
  for (auto it = out.begin(); it != out.end();) {
    bool any = false;
    for (const auto& v : it->second)
      if (v != 0) {
        any = true;
        break;
      }
    it = any ? std::next(it) : out.erase(it);
  }
  return out;
}

// 1/(q;q)_r truncated to n_max.
inline std::vector<Int> euler_finite_inv(long r, long n_max) {
  std::vector<Int> v(static_cast<size_t>(n_max) + 1, Int(0));
  v[0] = 1;
  // multiply successively by 1/(1-q^i) = sum_m q^{im}
  for (long i = 1; i <= r; ++i)
    for (long e = i; e <= n_max; ++e) v[static_cast<size_t>(e)] += v[static_cast<size_t>(e - i)];
  return v;
}

}  // namespace detail

inline BivariateTable refined_cphi_ct(long k, long n_max) {
  if (k < 1 || n_max < 0) throw SeriesError("refined_cphi_ct: bad arguments");
  long r_pos = 0;
  while ((r_pos + 1) * (r_pos + 2) / 2 <= n_max) ++r_pos;
  long r_neg = 1;
  while ((r_neg + 1) * r_neg / 2 <= n_max) ++r_neg;
  long z_cap = k * std::max(r_pos, r_neg);

  detail::TriPoly state;
  detail::tri_add_term(state, 0, 0, 0, Int(1), n_max);
  for (long j = 1; j <= k; ++j) {
    // (z t^j q; q)_infty = sum_r (-1)^r z^r t^{jr} q^{r(r+1)/2} / (q;q)_r
    detail::TriPoly f;
    for (long r = 0; r <= r_pos; ++r) {
      long base = r * (r + 1) / 2;
      if (base > n_max) break;
      auto inv = detail::euler_finite_inv(r, n_max - base);
      for (long e = 0; e <= n_max - base; ++e) {
        Int v = (r % 2 == 0) ? inv[static_cast<size_t>(e)] : -inv[static_cast<size_t>(e)];
        detail::tri_add_term(f, r, j * r, base + e, v, n_max);
      }
    }
    state = detail::tri_mul(state, f, n_max, z_cap);
    // (z^{-1} t^{-j}; q)_infty = sum_r (-1)^r z^{-r} t^{-jr} q^{r(r-1)/2} / (q;q)_r
    detail::TriPoly g;
    for (long r = 0; r <= r_neg; ++r) {
      long base = r * (r - 1) / 2;
      if (base > n_max) break;
      auto inv = detail::euler_finite_inv(r, n_max - base);
      for (long e = 0; e <= n_max - base; ++e) {
        Int v = (r % 2 == 0) ? inv[static_cast<size_t>(e)] : -inv[static_cast<size_t>(e)];
        detail::tri_add_term(g, -r, -j * r, base + e, v, n_max);
      }
    }
    state = detail::tri_mul(state, g, n_max, z_cap);
  }

  BivariateTable table;
  table.k = k;
  table.n_max = n_max;
  for (const auto& [key, qpoly] : state) {
    if (key.first != 0) continue;  // constant term in z
    long m = key.second;
    for (long n = 0; n <= n_max; ++n) {
      const Int& v = qpoly[static_cast<size_t>(n)];
      if (v == 0) continue;
      if (m < 0) {
        // symmetry check only; positive m carries the value
        Int mirrored = Int(0);
        auto it = state.find({0L, -m});
        if (it != state.end()) mirrored = it->second[static_cast<size_t>(n)];
        if (mirrored != v)
          throw SeriesError("refined_cphi_ct: color-difference symmetry violated");
        continue;
      }
      table.counts[{m, n}] += v;
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Modular-function triple:
//   f_ell = (q^ell;q^ell)_infty CPhi_ell(q)
//   g_ell = 1 + ell (q^ell;q^ell)_infty sum_{j>=1} p(ell j - delta_ell) q^j,
//           delta_ell = (ell^2-1)/24
//   h_ell = f_ell - g_ell - 2 ell^{(ell-11)/2} (eta(ell tau)/eta(tau))^{ell-11}
// f and g need ell prime >= 5; h additionally needs ell >= 17 (so that the
// eta-quotient exponent is a positive even integer).
// ---------------------------------------------------------------------------

inline void require_fgh_ell(long ell, bool for_h) {
  if (!is_prime(ell) || ell < 5) throw SeriesError("f/g/h: ell must be a prime >= 5");
  if (for_h && ell < 17) throw SeriesError("h_ell: defined for ell >= 17");
}

inline PuiseuxSeries f_ell(long ell, const Rat& prec) {
  require_fgh_ell(ell, false);
  return series_mul(pochhammer(Rat(ell), Rat(ell), -1, prec), cphi_series(ell, prec));
}

inline PuiseuxSeries g_ell(long ell, const Rat& prec) {
  require_fgh_ell(ell, false);
  long delta = (ell * ell - 1) / 24;
  PuiseuxSeries tail = series_mul(pochhammer(Rat(ell), Rat(ell), -1, prec),
                                  partition_progression(ell, delta, prec));
  return series_add(PuiseuxSeries::constant(Rat(1), prec), series_scalar_mul(Rat(ell), tail));
}

inline PuiseuxSeries h_ell(long ell, const Rat& prec) {
  require_fgh_ell(ell, true);
  long e = ell - 11;
  Int scale_int;
  mpz_ui_pow_ui(scale_int.get_mpz_t(), static_cast<unsigned long>(ell),
                static_cast<unsigned long>(e / 2));
  PuiseuxSeries quot = eta_quotient({{ell, e}, {1, -e}}, prec);
  return series_sub(series_sub(f_ell(ell, prec), g_ell(ell, prec)),
                    series_scalar_mul(Rat(2 * scale_int), quot));
}

}  // namespace qseries
