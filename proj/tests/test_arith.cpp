#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "polyzeta/combinatorics.hpp"
#include "polyzeta/dirichlet.hpp"
#include "polyzeta/mpoly.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/series.hpp"

using namespace polyzeta;

namespace {

Rational rnd_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  return Rational(num(rng), den(rng));
}

Series rnd_series(std::mt19937& rng, std::size_t order) {
  Series s(order);
  for (std::size_t i = 0; i <= order; ++i) s.set(i, rnd_rational(rng));
  return s;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("rational canonical form, parsing and powers") {
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(-4, -8) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational::from_string("-7/3").num() == -7);
  CHECK(Rational::from_string("-7/3").den() == 3);
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(Rational::pow(Rational(-2), 3) == Rational(-8));
  CHECK(Rational::pow(Rational(5), 0) == Rational(1));
  CHECK(Rational::pow(Rational(0), 5) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), std::domain_error);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK(Rational(7).is_integer());
  CHECK(!Rational(7, 2).is_integer());
  CHECK(Rational(-3, 2) < Rational(1, 2));
  CHECK(Rational(-3, 2).abs() == Rational(3, 2));
  CHECK(Rational(-3, 2).sign() == -1);
  CHECK(Rational(1, 4).to_double() == 0.25);
}

TEST_CASE("series division reproduces the Bernoulli generating function") {
  const std::size_t N = 16;
  Series q = series_div(series_t(N + 1), series_exp_minus_one(N + 1), N);
  for (unsigned n = 0; n <= N; ++n) CHECK(egf_coeff(q, n) == bernoulli_number(n));
}

TEST_CASE("series ring laws with random rational coefficients") {
  std::mt19937 rng(20250814u);
  const std::size_t N = 8;
  for (int rep = 0; rep < 20; ++rep) {
    Series a = rnd_series(rng, N), b = rnd_series(rng, N), c = rnd_series(rng, N);
    CHECK(series_mul(series_mul(a, b, N), c, N) == series_mul(a, series_mul(b, c, N), N));
    CHECK(series_mul(a, series_add(b, c, N), N) ==
          series_add(series_mul(a, b, N), series_mul(a, c, N), N));
    CHECK(series_mul(a, b, N) == series_mul(b, a, N));
    CHECK(series_add(series_sub(a, b, N), b, N) == a);
  }
}

TEST_CASE("series division inverts multiplication") {
  std::mt19937 rng(4242u);
  const std::size_t N = 8;
  for (int rep = 0; rep < 20; ++rep) {
    Series a = rnd_series(rng, N);
    Series b = rnd_series(rng, N);
    b.set(0, Rational(1 + rep % 3));  // invertible constant term
    Series q = series_div(a, b, N);
    CHECK(series_mul(q, b, N) == a);
  }
  // zero divisor and valuation mismatch both rejected
  CHECK_THROWS_AS(series_div(series_t(4), Series(4), 4), std::invalid_argument);
  Series one(5);
  one.set(0, Rational(1));
  CHECK_THROWS_AS(series_div(one, series_t(5), 4), std::invalid_argument);
}

TEST_CASE("composition inverse recovers the outer series") {
  std::mt19937 rng(7u);
  const std::size_t N = 10;
  Series inner(N);
  inner.set(1, Rational(1));
  for (std::size_t i = 2; i <= N; ++i) inner.set(i, rnd_rational(rng));
  // reversion by order-by-order correction of the compositional defect
  Series g(N);
  g.set(1, Rational(1));
  for (std::size_t n = 2; n <= N; ++n) {
    Series comp = series_compose(inner, g, N);
    g.set(n, g[n] - comp[n]);
  }
  Series idt = series_t(N);
  CHECK(series_compose(inner, g, N) == idt);
  CHECK(series_compose(g, inner, N) == idt);
  Series outer = rnd_series(rng, N);
  CHECK(series_compose(series_compose(outer, inner, N), g, N) == outer);
  // composition requires positive valuation of the inner series
  Series unit(5);
  unit.set(0, Rational(1));
  CHECK_THROWS_AS(series_compose(outer, unit, 5), std::invalid_argument);
}

TEST_CASE("valuation, derivative and exponential builders") {
  CHECK(!Series(5).valuation().has_value());
  CHECK(series_t(5).valuation().value() == 1);
  Series e = series_exp_minus_one(6);
  CHECK(e.valuation().value() == 1);
  Series d = series_derivative(e);
  for (std::size_t i = 0; i <= 5; ++i)
    CHECK(d[i] == Rational(mpz_class(1), factorial(static_cast<unsigned>(i))));
  Series f = series_one_minus_exp_neg(6);
  for (std::size_t i = 1; i <= 6; ++i) {
    Rational expect = Rational(mpz_class(1), factorial(static_cast<unsigned>(i)));
    if (i % 2 == 0) expect = -expect;
    CHECK(f[i] == expect);
  }
  CHECK(f[0] == Rational(0));
  CHECK(egf_coeff(series_exp_minus_one(8), 5) == Rational(1));
  CHECK(series_scale(Rational(-2), series_t(3))[1] == Rational(-2));
}

TEST_CASE("stirling2 matches exhaustive set-partition counts") {
  for (unsigned n = 0; n <= 8; ++n) {
    std::vector<unsigned long> count(n + 2, 0);
    // enumerate restricted-growth strings; `used` = number of blocks so far
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned used) {
      if (pos == n) {
        ++count[used];
        return;
      }
      for (unsigned v = 0; v <= used; ++v) rec(pos + 1, used + (v == used ? 1 : 0));
    };
    rec(0, 0);
    for (unsigned m = 0; m <= n + 1; ++m) CHECK(stirling2(n, m) == count[m]);
  }
  CHECK(stirling2(9, 10) == 0);
  CHECK(stirling2(0, 0) == 1);
}

TEST_CASE("factorial and binomial tables") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  for (unsigned n = 1; n <= 20; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("classical Bernoulli numbers") {
  CHECK(bernoulli_number(0) == Rational(1));
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (unsigned n = 3; n <= 19; n += 2) CHECK(bernoulli_number(n) == Rational(0));
}

TEST_CASE("truncated multivariate ring laws and caps") {
  std::mt19937 rng(99u);
  std::vector<unsigned> caps{4, 4};
  auto rnd_mp = [&]() {
    MPoly p(2, caps);
    std::uniform_int_distribution<unsigned> e(0, 4);
    for (int t = 0; t < 5; ++t) p.add_term({e(rng), e(rng)}, rnd_rational(rng));
    return p;
  };
  for (int rep = 0; rep < 10; ++rep) {
    MPoly a = rnd_mp(), b = rnd_mp(), c = rnd_mp();
    CHECK(((a * b) * c).terms() == (a * (b * c)).terms());
    CHECK((a * (b + c)).terms() == (a * b + a * c).terms());
  }
  // (1+x)^3 truncated at degree 2 in x
  MPoly one_plus_x = MPoly::constant(2, {2, 2}, Rational(1)) + MPoly::variable(2, {2, 2}, 0);
  MPoly cube = one_plus_x.pow(3);
  CHECK(cube.coeff({0, 0}) == Rational(1));
  CHECK(cube.coeff({1, 0}) == Rational(3));
  CHECK(cube.coeff({2, 0}) == Rational(3));
  CHECK(cube.coeff({3, 0}) == Rational(0));  // beyond cap: truncated away
}

TEST_CASE("exponential sum builder for multivariate series") {
  // 1 - e^{-(x+y)} through degree (3,3)
  MPoly f = mpoly_one_minus_exp_neg_sum(2, {3, 3}, {0, 1});
  CHECK(f.coeff({0, 0}) == Rational(0));
  CHECK(f.coeff({1, 0}) == Rational(1));
  CHECK(f.coeff({2, 0}) == Rational(-1, 2));
  CHECK(f.coeff({1, 1}) == Rational(-1));
  CHECK(f.coeff({2, 1}) == Rational(1, 2));
  CHECK(f.coeff({3, 0}) == Rational(1, 6));
  // single-variable flavor matches the univariate builder
  MPoly g = mpoly_one_minus_exp_neg_sum(2, {3, 3}, {1});
  Series s = series_one_minus_exp_neg(3);
  for (unsigned i = 0; i <= 3; ++i) CHECK(g.coeff({0, i}) == s[i]);
}

TEST_CASE("dirichlet polynomial exact and float evaluation agree") {
  DirichletPoly d(1);
  d.add_term({2}, Rational(-1));
  d.add_term({3}, Rational(1));
  CHECK(d.eval_int1(-2) == Rational(5));  // 9 - 4
  CHECK(d.eval_int1(0) == Rational(0));
  CHECK(d.eval_int1(1) == Rational(-1, 6));  // 1/3 - 1/2
  NumValue v = d.eval_real({1.5});
  double truth = std::pow(3.0, -1.5) - std::pow(2.0, -1.5);
  CHECK(std::fabs(v.value - truth) <= v.err + 1e-15);

  d.add_term({2}, Rational(1));  // cancels the 2^{-s} term
  CHECK(d.eval_int1(-2) == Rational(9));

  DirichletPoly d2(2);
  d2.add_term({2, 3}, Rational(1, 2));
  CHECK(d2.eval_int({-1, -1}) == Rational(3));
  CHECK(d2.eval_int({-2, -1}) == Rational(6));
  for (double s : {0.5, 1.0, 2.5}) {
    NumValue w = d2.eval_real({s, s + 0.5});
    double tw = 0.5 * std::pow(2.0, -s) * std::pow(3.0, -s - 0.5);
    CHECK(std::fabs(w.value - tw) <= w.err + 1e-15);
  }
  CHECK_THROWS_AS(d.eval_int({1, 2}), std::invalid_argument);
}

}  // TEST_SUITE("arith")
