#include <doctest.h>

#include "ellgen/theta.hpp"
#include "support.hpp"

using namespace test;

namespace {

using QS = QSeries<SFunc>;

QS series(std::vector<long> c) {
  std::vector<SFunc> out;
  for (long x : c) out.emplace_back(Rational(x));
  return QS::from_coeffs(out);
}

QS random_series(std::mt19937_64& rng, int order) {
  QS s(order);
  for (int k = 0; k <= order; ++k) s[k] = random_sfunc(rng);
  return s;
}

}  // namespace

TEST_CASE("Cauchy products") {
  CHECK(qs_mul(series({1, 1, 0}), series({1, -1, 0})) == series({1, 0, -1}));
  const QS a = series({3, -1, 4, 1});
  CHECK(qs_mul(a, series({1, 0, 0, 0})) == a);
  CHECK(qs_mul(series({1, 1, 1, 1, 1, 1}), series({1, -1, 0, 0, 0, 0})) == series({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("inversion") {
  CHECK(qs_invert(series({1, -1, 0, 0})) == series({1, 1, 1, 1}));
  QS c(2);
  c[0] = SFunc(Rational(4));
  c[1] = c[2] = SFunc(Rational(0));
  CHECK(qs_invert(c)[0] == SFunc(Rational(1, 4)));
  CHECK_THROWS_AS(qs_invert(series({0, 1, 0})), NonUnitLeadingTerm);
  // σ(0) = 0: the log-canonical failure mode.
  CHECK_THROWS_AS(qs_invert(sigma_pure(0, 3, 2)), NonUnitLeadingTerm);
}

TEST_CASE("coefficient extraction") {
  CHECK(qs_coefficient(series({1, 2}), 1) == SFunc(Rational(2)));
  CHECK_THROWS_AS(qs_coefficient(series({1, 2}), 2), OutOfRange);
  CHECK_THROWS_AS(qs_coefficient(series({1, 2}), -1), OutOfRange);
  std::mt19937_64 rng(1);
  const QS u = random_series(rng, 3);
  CHECK(qs_coefficient(u, 0) == u[0]);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 8; ++i) {
    const QS a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("double inversion is the identity") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 8; ++i) {
    QS a = random_series(rng, 5);
    if (a[0].is_zero()) a[0] = SFunc(Rational(1));
    CHECK(qs_invert(qs_invert(a)) == a);
    CHECK(a * qs_invert(a) == QS::constant(SFunc(Rational(1)), 5));
  }
}

TEST_CASE("truncation follows the shorter operand") {
  const QS a = series({1, 2, 3, 4}), b = series({1, 1});
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
  CHECK(render(a.truncated(1)) == "q^0: 1\nq^1: 2\n");
}
