#include <doctest.h>

#include "ellgen/polynomial.hpp"
#include "ellgen/rfunc.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("6/-4"), std::invalid_argument);
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK(binomial(-2, 3) == -4);
}

TEST_CASE("SPoly rendering uses rational exponents of y") {
  CHECK(render(poly({{0, 1}, {1, -2}, {6, 1}}, 2)) == "1 - 2*y^(1/2) + y^3");
  CHECK(render(SPoly(Rational(0), 4)) == "0");
}

TEST_CASE("polynomial gcd and exact division") {
  const SPoly a = poly({{0, -1}, {2, 1}});  // s² - 1
  const SPoly b = poly({{0, -1}, {1, 1}});  // s - 1
  CHECK(poly_gcd(a, b) == b);
  CHECK(*exact_divide(a, b) == poly({{0, 1}, {1, 1}}));
  CHECK_FALSE(exact_divide(b, a).has_value());
  CHECK(cyclotomic(6, 1) == poly({{0, 1}, {1, -1}, {2, 1}}));
}

TEST_CASE("sfunc_eval_at_s1") {
  CHECK(sfunc_eval_at_s1(frac(poly({{0, -1}, {2, 1}}), poly({{0, -1}, {1, 1}}))) == 2);
  CHECK_THROWS_AS(sfunc_eval_at_s1(frac(mono(0), poly({{0, -1}, {1, 1}}))), PoleAtOne);
  // (y - 1)/(y² - 1) with y = s²
  CHECK(sfunc_eval_at_s1(frac(poly({{0, -1}, {2, 1}}, 2), poly({{0, -1}, {4, 1}}, 2))) == Rational(1, 2));
}

TEST_CASE("SFunc canonical form") {
  const SFunc f = frac(poly({{-1, 2}, {1, -2}}, 2), poly({{0, 4}, {2, -4}}, 2));
  CHECK(f.denominator().coeff(0) == 1);
  CHECK(f == frac(mono(-1, 2, Rational(1, 2)), mono(0, 2)));
  CHECK(f.to_string() == "1/2*y^(-1/2)");
}

TEST_CASE("SFunc field axioms on random values") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const SFunc f = random_sfunc(rng), g = random_sfunc(rng), h = random_sfunc(rng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    if (!f.is_zero()) CHECK(f * f.inverse() == SFunc(Rational(1)));
  }
}

TEST_CASE("canonical equality agrees with cross-multiplication") {
  std::mt19937_64 rng(5);
  int equal = 0;
  for (int i = 0; i < 100; ++i) {
    const SFunc f = random_sfunc(rng);
    const SPoly k = random_poly(rng);
    const SFunc g = i % 3 == 0 ? SFunc(f.numerator() * k, f.denominator() * k) : random_sfunc(rng);
    CHECK((f == g) == cross_equal(f, g));
    equal += f == g;
    CHECK(SFunc(f.numerator(), f.denominator()) == f);
  }
  CHECK(equal >= 34);
}

TEST_CASE("scaling the equality witness") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const SFunc f = random_sfunc(rng);
    const SPoly k = random_poly(rng);
    const SFunc g(f.numerator() * k, f.denominator() * k);
    CHECK(f == g);
    CHECK(cross_equal(f, g));
  }
}

TEST_CASE("root-order rescaling round-trips") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    const SPoly p = random_poly(rng);
    for (int k : {1, 2, 3, 5}) CHECK(p.rescaled(k).downscaled(k) == p);
    CHECK(p.rescaled(3) == p);
  }
}

namespace {

/// w^e as an RPoly with root order 1, times an SFunc.
RPoly wmono(long e, const SFunc& c = SFunc(Rational(1))) { return RPoly::monomial(c, e, 1); }
const RPoly kOne = wmono(0);

}  // namespace

TEST_CASE("rfunc_limit_w1") {
  for (long b = 1; b <= 5; ++b) CHECK(rfunc_limit_w1(RFunc(wmono(b) - kOne, wmono(1) - kOne)) == SFunc(Rational(b)));
  const SFunc c = frac(poly({{0, 1}, {1, 3}}), poly({{0, 1}, {2, 1}}));
  CHECK(rfunc_limit_w1(RFunc(c)) == c);
  CHECK_THROWS_AS(rfunc_limit_w1(RFunc(kOne, wmono(1) - kOne)), PoleAtOne);

  // Bridge-shaped quotient (w^(mb) - 1)/((w^b - 1)(y^a1 w^b1 - 1)(y^a2 w^b2 - 1)), (m,b,b1,b2) = (2,1,1,1):
  // the limit is m/((y^a1 - 1)(y^a2 - 1)).
  const SFunc y1(mono(1)), y3inv(mono(-3));
  const RPoly den = (wmono(1) - kOne) * (wmono(1, y1) - kOne) * (wmono(1, y3inv) - kOne);
  const SFunc want = SFunc(Rational(2)) / ((y1 - SFunc(Rational(1))) * (y3inv - SFunc(Rational(1))));
  CHECK(rfunc_limit_w1(RFunc(wmono(2) - kOne, den)) == want);
}

TEST_CASE("RFunc arithmetic and unreduced equality") {
  const RFunc f(wmono(2) - kOne, wmono(1) - kOne, false);
  CHECK(f == RFunc(wmono(1) + kOne, kOne));
  CHECK((f - RFunc(wmono(1), kOne)) == RFunc(kOne, kOne));
  CHECK(f * f.inverse() == RFunc(SFunc(Rational(1))));
}
