// Exact Puiseux-series arithmetic: ring laws on randomized inputs, precision
// bookkeeping, dissection/substitution round trips, and the text format.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qseries/builders.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

// Random series with bounded rational coefficients on a scale-s exponent grid.
PuiseuxSeries random_series(std::mt19937& rng, bool integer_grid = false,
                            bool unit_constant = false) {
  std::uniform_int_distribution<long> scale_d(1, 4);
  std::uniform_int_distribution<long> prec_d(12, 25);
  std::uniform_int_distribution<long> idx_d(0, 24);
  std::uniform_int_distribution<long> num_d(-9, 9);
  std::uniform_int_distribution<long> den_d(1, 4);
  std::uniform_int_distribution<int> nterms_d(0, 10);

  long scale = integer_grid ? 1 : scale_d(rng);
  Rat prec(prec_d(rng));
  PuiseuxSeries a = unit_constant ? PuiseuxSeries::constant(Rat(1), prec)
                                  : PuiseuxSeries::zero(prec);
  int nterms = nterms_d(rng);
  for (int t = 0; t < nterms; ++t) {
    long num = num_d(rng);
    if (num == 0) continue;
    Rat e = make_rat(idx_d(rng), scale);
    if (unit_constant && e == 0) continue;  // keep the forced leading 1
    a = series_add(a, PuiseuxSeries::monomial(e, make_rat(num, den_d(rng)), prec));
  }
  return a;
}

}  // namespace

TEST_CASE("construction and normalization") {
  PuiseuxSeries z = PuiseuxSeries::zero(Rat(10));
  CHECK(z.is_zero());
  CHECK(z.scale == 1);

  // Non-reduced exponent collapses to the minimal grid.
  PuiseuxSeries m = PuiseuxSeries::monomial(make_rat(2, 4), Rat(3), Rat(10));
  CHECK(m.scale == 2);
  CHECK(m.coefficient(make_rat(1, 2)) == 3);
  CHECK(m.coefficient(Rat(1)) == 0);

  // Cancellation relaxes the grid back to integers.
  PuiseuxSeries a = series_add(PuiseuxSeries::monomial(make_rat(1, 2), Rat(1), Rat(10)),
                               PuiseuxSeries::monomial(Rat(1), Rat(5), Rat(10)));
  PuiseuxSeries b = series_sub(a, PuiseuxSeries::monomial(make_rat(1, 2), Rat(1), Rat(10)));
  CHECK(b.scale == 1);
  CHECK(b.coefficient(1) == 5);

  // Zero coefficients are never stored.
  PuiseuxSeries c = series_sub(a, a);
  CHECK(c.is_zero());
  CHECK(c.support_size() == 0);
}

TEST_CASE("coefficient access respects the precision horizon") {
  PuiseuxSeries a = PuiseuxSeries::monomial(Rat(3), Rat(7), Rat(10));
  CHECK(a.coefficient(3) == 7);
  CHECK(a.coefficient(9) == 0);
  CHECK(a.coefficient(make_rat(19, 2)) == 0);
  CHECK_THROWS_AS(a.coefficient(10), OutOfPrecision);
  CHECK_THROWS_AS(a.coefficient(make_rat(21, 2)), OutOfPrecision);
}

TEST_CASE("ring laws hold on randomized series") {
  std::mt19937 rng(0x5eed001);
  for (int trial = 0; trial < 100; ++trial) {
    PuiseuxSeries a = random_series(rng);
    PuiseuxSeries b = random_series(rng);
    PuiseuxSeries c = random_series(rng);

    // Associativity and commutativity of addition.
    CHECK(series_equal(series_add(series_add(a, b), c), series_add(a, series_add(b, c))));
    CHECK(series_equal(series_add(a, b), series_add(b, a)));

    // Commutativity of multiplication.
    CHECK(series_equal(series_mul(a, b), series_mul(b, a)));

    // Distributivity: compare on the common known range.
    PuiseuxSeries lhs = series_mul(a, series_add(b, c));
    PuiseuxSeries rhs = series_add(series_mul(a, b), series_mul(a, c));
    CHECK(series_equal(lhs, rhs));

    // Scalar pull-through.
    Rat k = make_rat(trial - 50, 3);
    CHECK(series_equal(series_scalar_mul(k, series_mul(a, b)),
                       series_mul(series_scalar_mul(k, a), b)));
  }
}

TEST_CASE("multiplicative inverse round trip") {
  std::mt19937 rng(0x5eed002);
  for (int trial = 0; trial < 100; ++trial) {
    PuiseuxSeries a = random_series(rng, /*integer_grid=*/false, /*unit_constant=*/true);
    PuiseuxSeries inv = series_invert(a);
    PuiseuxSeries prod = series_mul(a, inv);
    CHECK(series_equal(prod, PuiseuxSeries::constant(Rat(1), prod.prec)));
  }
  CHECK_THROWS_AS(series_invert(PuiseuxSeries::zero(Rat(5))), SeriesError);
}

TEST_CASE("product precision is min(prec_a + lo_b, prec_b + lo_a)") {
  // a = q^2 + ..., known below q^10;  b = q^3 + ..., known below q^8.
  PuiseuxSeries a = series_add(PuiseuxSeries::monomial(Rat(2), Rat(1), Rat(10)),
                               PuiseuxSeries::monomial(Rat(5), Rat(4), Rat(10)));
  PuiseuxSeries b = series_add(PuiseuxSeries::monomial(Rat(3), Rat(1), Rat(8)),
                               PuiseuxSeries::monomial(Rat(6), Rat(-2), Rat(8)));
  PuiseuxSeries p = series_mul(a, b);
  CHECK(p.prec == Rat(10));  // min(10 + 3, 8 + 2)
  CHECK(p.coefficient(5) == 1);
  CHECK(p.coefficient(8) == 4 - 2);
  CHECK_THROWS_AS(p.coefficient(10), OutOfPrecision);

  // Inversion starts at -lo and is known below prec - 2*lo.
  PuiseuxSeries inv = series_invert(a);
  CHECK(inv.prec == Rat(10 - 4));
  CHECK(inv.coefficient(-2) == 1);
  CHECK(inv.coefficient(1) == -4);  // (q^2(1 + 4q^3))^{-1} = q^{-2}(1 - 4q^3 + ...)
}

TEST_CASE("powers") {
  PuiseuxSeries a = series_add(PuiseuxSeries::constant(Rat(1), Rat(20)),
                               PuiseuxSeries::monomial(Rat(1), Rat(1), Rat(20)));
  PuiseuxSeries cube = series_pow(a, 3);
  CHECK(cube.coefficient(0) == 1);
  CHECK(cube.coefficient(1) == 3);
  CHECK(cube.coefficient(2) == 3);
  CHECK(cube.coefficient(3) == 1);
  CHECK(cube.coefficient(4) == 0);
  CHECK(series_equal(series_pow(a, 0), PuiseuxSeries::constant(Rat(1), Rat(20))));
  // Negative powers invert first: (1+q)^{-2} = 1 - 2q + 3q^2 - 4q^3 + ...
  PuiseuxSeries isq = series_pow(a, -2);
  CHECK(isq.coefficient(0) == 1);
  CHECK(isq.coefficient(1) == -2);
  CHECK(isq.coefficient(2) == 3);
  CHECK(isq.coefficient(3) == -4);
}

TEST_CASE("substitute_power scales exponents and precision") {
  PuiseuxSeries a = series_add(PuiseuxSeries::monomial(Rat(1), Rat(2), Rat(6)),
                               PuiseuxSeries::monomial(Rat(4), Rat(-1), Rat(6)));
  PuiseuxSeries b = substitute_power(a, Rat(3));
  CHECK(b.prec == Rat(18));
  CHECK(b.coefficient(3) == 2);
  CHECK(b.coefficient(12) == -1);

  PuiseuxSeries h = substitute_power(a, make_rat(1, 2));
  CHECK(h.prec == Rat(3));
  CHECK(h.coefficient(make_rat(1, 2)) == 2);
  CHECK_THROWS_AS(substitute_power(a, Rat(0)), SeriesError);
}

TEST_CASE("dissection is a partition of the series") {
  std::mt19937 rng(0x5eed003);
  for (int trial = 0; trial < 100; ++trial) {
    PuiseuxSeries a = random_series(rng, /*integer_grid=*/true);
    long m = 2 + trial % 4;
    PuiseuxSeries sum = PuiseuxSeries::zero(a.prec);
    for (long r = 0; r < m; ++r) {
      PuiseuxSeries piece = series_shift(substitute_power(dissect(a, m, r), Rat(m)), Rat(r));
      sum = series_add(sum, piece);
    }
    CHECK(sum.prec == a.prec);  // ((prec - r)/m)*m + r telescopes back
    CHECK(series_equal(sum, a));
  }
  PuiseuxSeries frac = PuiseuxSeries::monomial(make_rat(1, 2), Rat(1), Rat(5));
  CHECK_THROWS_AS(dissect(frac, 2, 0), SeriesError);
  CHECK_THROWS_AS(dissect(PuiseuxSeries::zero(Rat(5)), 2, 2), SeriesError);
}

TEST_CASE("alternate_sign flips odd coefficients and is an involution") {
  std::mt19937 rng(0x5eed004);
  for (int trial = 0; trial < 100; ++trial) {
    PuiseuxSeries a = random_series(rng, /*integer_grid=*/true);
    PuiseuxSeries twice = alternate_sign(alternate_sign(a));
    CHECK(series_equal(twice, a));
  }
  PuiseuxSeries a = series_add(PuiseuxSeries::monomial(Rat(1), Rat(3), Rat(9)),
                               PuiseuxSeries::monomial(Rat(2), Rat(5), Rat(9)));
  PuiseuxSeries s = alternate_sign(a);
  CHECK(s.coefficient(1) == -3);
  CHECK(s.coefficient(2) == 5);
}

TEST_CASE("series_compare reports the first mismatch in exponent order") {
  PuiseuxSeries a = series_add(PuiseuxSeries::constant(Rat(1), Rat(10)),
                               PuiseuxSeries::monomial(make_rat(1, 4), Rat(2), Rat(10)));
  PuiseuxSeries b = series_add(PuiseuxSeries::constant(Rat(1), Rat(12)),
                               PuiseuxSeries::monomial(make_rat(1, 4), Rat(5), Rat(12)));
  CompareResult res = series_compare(a, b);
  REQUIRE(res.mismatch.has_value());
  CHECK(res.mismatch->exponent == make_rat(1, 4));
  CHECK(res.mismatch->lhs == 2);
  CHECK(res.mismatch->rhs == 5);
  CHECK(res.compared_up_to == Rat(10));

  // A bound below the mismatch hides it.
  CHECK(series_equal(a, b, make_rat(1, 4)));
  // Mixed grids: a mismatch visible only on the finer grid is still found.
  PuiseuxSeries c = PuiseuxSeries::constant(Rat(1), Rat(10));
  CompareResult res2 = series_compare(a, c);
  REQUIRE(res2.mismatch.has_value());
  CHECK(res2.mismatch->exponent == make_rat(1, 4));
  CHECK(res2.mismatch->rhs == 0);
}

TEST_CASE("serialization round trip preserves the exact representation") {
  std::mt19937 rng(0x5eed005);
  for (int trial = 0; trial < 100; ++trial) {
    PuiseuxSeries a = random_series(rng);
    std::string text = series_serialize(a);
    PuiseuxSeries back = series_deserialize(text);
    CHECK(back.scale == a.scale);
    CHECK(back.prec == a.prec);
    CHECK(back.support_size() == a.support_size());
    CHECK(series_equal(back, a));
  }
}

TEST_CASE("deserialization rejects malformed input") {
  CHECK_THROWS_AS(series_deserialize("bogus"), SeriesError);
  CHECK_THROWS_AS(series_deserialize("scale 0 prec 5 lo 0"), SeriesError);
  // Explicit zero coefficient.
  CHECK_THROWS_AS(series_deserialize("scale 1 prec 5 lo 1\n1 0\n"), SeriesError);
  // Duplicate index.
  CHECK_THROWS_AS(series_deserialize("scale 1 prec 5 lo 1\n1 2\n1 3\n"), SeriesError);
  // Trailing junk on a row.
  CHECK_THROWS_AS(series_deserialize("scale 1 prec 5 lo 1\n1 2 extra\n"), SeriesError);
  // Non-minimal scale: both indices even on a scale-2 grid.
  CHECK_THROWS_AS(series_deserialize("scale 2 prec 5 lo 2\n2 1\n4 1\n"), SeriesError);
  // Header lo disagreeing with the body.
  CHECK_THROWS_AS(series_deserialize("scale 1 prec 5 lo 0\n1 2\n"), SeriesError);
}
