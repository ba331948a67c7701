// Classical q-series constructors checked against their defining sums,
// computed here by independent brute-force loops.

#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "qseries/builders.hpp"
#include "qseries/partition.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

// sum_{n in Z} q^{x n(n+1)/2 + y n(n-1)/2}, the triple-product theta.
PuiseuxSeries theta_sum(const Rat& x, const Rat& y, const Rat& prec) {
  std::vector<std::pair<Rat, Rat>> terms;
  for (long n = -200; n <= 200; ++n) {
    Rat e = x * Rat(n) * Rat(n + 1) / 2 + y * Rat(n) * Rat(n - 1) / 2;
    if (e < prec) terms.emplace_back(e, Rat(1));
  }
  return series_from_terms(terms, prec);
}

}  // namespace

TEST_CASE("pochhammer matches Euler's pentagonal expansion") {
  Rat prec(80);
  PuiseuxSeries euler = pochhammer(Rat(1), Rat(1), -1, prec);
  std::vector<std::pair<Rat, Rat>> terms;
  for (long k = -20; k <= 20; ++k) {
    Rat e = make_rat(k * (3 * k - 1), 2);
    terms.emplace_back(e, Rat(k % 2 == 0 ? 1 : -1));
  }
  CHECK(series_equal(euler, series_from_terms(terms, prec)));
}

TEST_CASE("inverse Euler product generates partition numbers") {
  Rat prec(51);
  PuiseuxSeries gen = series_invert(pochhammer(Rat(1), Rat(1), -1, prec));
  for (long n = 0; n <= 50; ++n) CHECK(gen.coefficient(n) == Rat(partition(n)));
  CHECK(partition(50) == Int("204226"));
  CHECK(partition(Rat(7)) == Int(15));
  CHECK(partition(make_rat(7, 2)) == 0);  // non-integral arguments count nothing
  CHECK(partition(-3) == 0);
}

TEST_CASE("pochhammer with positive sign and general progression") {
  // (-q; q)_infty = sum over partitions into distinct parts.
  PuiseuxSeries dist = pochhammer(Rat(1), Rat(1), 1, Rat(12));
  long expected[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12};
  for (long n = 0; n < 12; ++n) CHECK(dist.coefficient(n) == expected[n]);

  // (q^2; q^5)_infty touches only exponents generated by 2 mod 5.
  PuiseuxSeries g = pochhammer(Rat(2), Rat(5), -1, Rat(10));
  CHECK(g.coefficient(0) == 1);
  CHECK(g.coefficient(2) == -1);
  CHECK(g.coefficient(7) == -1);
  CHECK(g.coefficient(9) == 1);  // q^2 * q^7
  CHECK(g.coefficient(1) == 0);
}

TEST_CASE("eta powers and quotients compose") {
  Rat prec(20);
  PuiseuxSeries e1 = eta_power(1, 1, prec);
  CHECK(series_equal(e1, series_shift(pochhammer(Rat(1), Rat(1), -1, prec - make_rat(1, 24)),
                                      make_rat(1, 24))));
  CHECK(series_equal(series_mul(eta_power(2, 3, prec), eta_power(2, -3, prec)),
                     PuiseuxSeries::constant(Rat(1), prec)));
  CHECK(series_equal(eta_quotient({{5, 1}, {1, -1}}, prec),
                     series_mul(eta_power(5, 1, prec), eta_power(1, -1, prec))));
}

TEST_CASE("classical theta functions") {
  Rat prec(30);
  PuiseuxSeries t3 = theta(3, Rat(1), prec);
  CHECK(t3.coefficient(0) == 1);
  for (long n = 1; n < 30; ++n) {
    long root = 0;
    while (root * root < n) ++root;
    CHECK(t3.coefficient(n) == (root * root == n ? 2 : 0));
  }

  // Theta2 lives on the quarter-integer grid (2j+1)^2/4.
  PuiseuxSeries t2 = theta(2, Rat(1), prec);
  CHECK(t2.coefficient(make_rat(1, 4)) == 2);
  CHECK(t2.coefficient(make_rat(9, 4)) == 2);
  CHECK(t2.coefficient(make_rat(25, 4)) == 2);
  CHECK(t2.coefficient(make_rat(3, 4)) == 0);
  CHECK(t2.coefficient(Rat(1)) == 0);

  // Argument scaling q -> q^r.
  CHECK(series_equal(theta(3, Rat(2), prec), substitute_power(theta(3, Rat(1), prec / 2), Rat(2))));
  CHECK_THROWS_AS(theta(4, Rat(1), prec), SeriesError);

  // Triple product: theta3(q) = f(q, q) in Ramanujan's notation.
  CHECK(series_equal(t3, jacobi_f(Rat(1), Rat(1), prec)));

  // Two-squares: theta3^2 = 1 + 4 sum_n ( sum_{d|n} chi_{-4}(d) ) q^n.
  PuiseuxSeries lhs = series_mul(t3, t3);
  PuiseuxSeries rhs =
      series_add(PuiseuxSeries::constant(Rat(1), prec),
                 series_scalar_mul(Rat(4), twisted_eisenstein(-4, 0, TwistSide::Codivisor, prec)));
  CHECK(series_equal(lhs, rhs));
}

TEST_CASE("jacobi_f equals its bilateral theta sum") {
  Rat prec(40);
  const std::pair<Rat, Rat> args[] = {
      {Rat(1), Rat(1)}, {Rat(1), Rat(2)}, {Rat(3), Rat(5)}, {make_rat(1, 2), make_rat(3, 2)}};
  for (const auto& [x, y] : args) {
    CHECK(series_equal(jacobi_f(x, y, prec), theta_sum(x, y, prec)));
  }
  CHECK_THROWS_AS(jacobi_f(Rat(0), Rat(1), prec), SeriesError);
}

TEST_CASE("generalized eta reduction rules") {
  Rat prec(8);
  // Period with sign: E_{a+L} = -E_a.
  CHECK(series_equal(gen_eta(17, 19, prec), series_neg(gen_eta(17, 2, prec))));
  // Reflection: E_{L-a} = E_a, hence E_{-a} = -E_a.
  CHECK(series_equal(gen_eta(17, 15, prec), gen_eta(17, 2, prec)));
  CHECK(series_equal(gen_eta(17, -2, prec), series_neg(gen_eta(17, 2, prec))));
  CHECK_THROWS_AS(gen_eta(17, 34, prec), SeriesError);
  // Leading exponent is L*B2(a/L)/2 with B2(x) = x^2 - x + 1/6.
  PuiseuxSeries e = gen_eta(5, 2, prec);
  Rat lead = Rat(5) * (make_rat(4, 25) - make_rat(2, 5) + make_rat(1, 6)) / 2;
  CHECK(e.coefficient(lead) == 1);
}

TEST_CASE("Eisenstein series coefficients are divisor sums") {
  Rat prec(31);
  PuiseuxSeries e2 = eisenstein(2, 1, prec);
  PuiseuxSeries e4 = eisenstein(4, 1, prec);
  CHECK(e2.coefficient(0) == 1);
  CHECK(e4.coefficient(0) == 1);
  for (long n = 1; n <= 30; ++n) {
    CHECK(e2.coefficient(n) == Rat(Int(-24) * sigma(n, 1)));
    CHECK(e4.coefficient(n) == Rat(Int(240) * sigma(n, 3)));
  }
  // q -> q^r rescaling.
  CHECK(series_equal(eisenstein(2, 3, prec), substitute_power(eisenstein(2, 1, prec / 3), Rat(3))));
}

TEST_CASE("twisted Eisenstein series match brute-force character sums") {
  Rat prec(40);
  auto brute = [&](long d, unsigned w, TwistSide side) {
    std::vector<std::pair<Rat, Rat>> terms;
    for (long n = 1; n < 40; ++n) {
      Rat acc(0);
      if (side == TwistSide::Index) {
        acc = Rat(Int(kronecker(d, n)) * sigma(n, w));
      } else {
        for (long dv = 1; dv <= n; ++dv) {
          if (n % dv != 0) continue;
          long base = (side == TwistSide::Divisor) ? n / dv : dv;
          Int p(1);
          for (unsigned j = 0; j < w; ++j) p *= base;
          acc += Rat(Int(kronecker(d, dv)) * p);
        }
      }
      terms.emplace_back(Rat(n), acc);
    }
    return series_from_terms(terms, prec);
  };
  CHECK(series_equal(twisted_eisenstein(5, 1, TwistSide::Divisor, prec),
                     brute(5, 1, TwistSide::Divisor)));
  CHECK(series_equal(twisted_eisenstein(5, 1, TwistSide::Codivisor, prec),
                     brute(5, 1, TwistSide::Codivisor)));
  CHECK(series_equal(twisted_eisenstein(-3, 3, TwistSide::Index, prec),
                     brute(-3, 3, TwistSide::Index)));
  CHECK(series_equal(twisted_eisenstein(12, 2, TwistSide::Divisor, prec),
                     brute(12, 2, TwistSide::Divisor)));
}

TEST_CASE("partition progression extracts p(ell j - c)") {
  Rat prec(25);
  PuiseuxSeries s = partition_progression(5, 4, prec);
  CHECK(s.coefficient(0) == 0);
  for (long j = 1; j < 25; ++j) CHECK(s.coefficient(j) == Rat(partition(5 * j - 4)));
}

TEST_CASE("binary quadratic form theta matches lattice brute force") {
  Rat prec(30);
  auto brute = [&](long a, long b, long c) {
    std::vector<std::pair<Rat, Rat>> terms;
    for (long x = -40; x <= 40; ++x)
      for (long y = -40; y <= 40; ++y) {
        long v = a * x * x + b * x * y + c * y * y;
        if (v < 30) terms.emplace_back(Rat(v), Rat(1));
      }
    return series_from_terms(terms, prec);
  };
  CHECK(series_equal(binary_qf_theta(1, 1, 1, prec), brute(1, 1, 1)));
  CHECK(series_equal(binary_qf_theta(2, 1, 3, prec), brute(2, 1, 3)));
  CHECK(series_equal(binary_qf_theta(1, 0, 5, prec), brute(1, 0, 5)));
  CHECK_THROWS_AS(binary_qf_theta(1, 2, 1, prec), SeriesError);  // indefinite
}
