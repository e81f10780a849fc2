#include <doctest.h>

#include "ellgen/theta.hpp"
#include "ellgen/theta_numeric.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("sigma at z through q^1") {
  const auto s = sigma_pure(Rational(1), 1);
  const SPoly lead = poly({{1, 1}, {-1, -1}}, 2);
  CHECK(s[0] == lead);
  CHECK(s[1] == lead * poly({{2, -1}, {-2, -1}, {0, 2}}, 2));
}

TEST_CASE("sigma is odd and vanishes at zero") {
  for (const Rational& a : std::vector<Rational>{Rational(1), Rational(3), Rational(1) / 2, Rational(-5) / 3}) {
    const auto p = sigma_pure(a, 4), m = sigma_pure(-a, 4);
    for (int k = 0; k <= 4; ++k) CHECK(m[k] == -p[k]);
  }
  CHECK(sigma_pure(Rational(0), 3).is_zero());
}

TEST_CASE("sigma_shifted") {
  const auto m = Model(5, 7).curve("A", 0, -2, false).m;
  const auto s = sigma_shifted(m, curve_class(m, 0), Rational(2), 3);
  const auto p = sigma_pure(Rational(2), 3);
  for (int k = 0; k <= 3; ++k) CHECK(s.deg0[k] == p[k]);
  CHECK_THROWS_AS(sigma_shifted(m, curve_class(m, 0), Rational(0), 3), ZeroArgument);
}

TEST_CASE("Chern factor at q^0") {
  const auto c = chern_genus_coeffs(2);
  CHECK(c[0][0] == poly({{-1, 1}, {1, -1}}, 2));
  CHECK(c[1][0] == poly({{-1, 1}, {1, 1}}, 2) * Rational(1, 2));
  CHECK(c[2][0] == poly({{-1, 1}, {1, -1}}, 2) * Rational(1, 12));
}

TEST_CASE("phi symmetry and special values") {
  CHECK(phi_correction(Rational(0), 3).is_zero());
  CHECK(phi_correction(Rational(-2), 3).is_zero());
  CHECK_THROWS_AS(phi_correction(Rational(-1), 3), LogCanonicalPole);
  for (const Rational& a : std::vector<Rational>{Rational(1), Rational(2), Rational(1) / 2, Rational(-7) / 3}) {
    const auto p = phi_correction(a, 3), m = phi_correction(-2 - a, 3);
    const int root = root_order_for({a, -2 - a});
    CHECK(phi_correction(a, 3, root) == phi_correction(-2 - a, 3, root));
    CHECK(p == m);
  }
}

TEST_CASE("exact series against theta products") {
  const Complex z{0.21, 0.03}, tau{0.1, 1.3};
  for (const Rational& a : std::vector<Rational>{Rational(1), Rational(1) / 2, Rational(-4) / 3}) {
    const Complex zn = z * a.get_d();
    const Complex exact = evaluate(sigma_pure(a, 8), z, tau);
    CHECK(std::abs(exact - sigma_numeric(zn, tau)) < 1e-9 * std::abs(exact));
    const Complex phi = evaluate(phi_correction(a, 8), z, tau);
    CHECK(std::abs(phi - phi_numeric(a, z, tau)) < 1e-9 * (1 + std::abs(phi)));
  }
}

TEST_CASE("theta values") {
  CHECK(std::abs(theta_numeric(0, {0, 1})) < 1e-15);
  const Complex tau{0.2, 0.9}, t{0.31, -0.07};
  CHECK(std::abs(theta_numeric(-t, tau) + theta_numeric(t, tau)) < 1e-13);
  // ϑ'(0) = 2π η³.
  const Complex q = std::exp(Complex(0, 2 * M_PI) * tau);
  Complex eta = std::exp(Complex(0, 2 * M_PI) * tau / 24.0);
  for (int n = 1; n < 80; ++n) eta *= 1.0 - std::pow(q, n);
  CHECK(std::abs(theta_prime_zero(tau) - 2 * M_PI * eta * eta * eta) < 1e-12);
  CHECK_THROWS_AS(theta_numeric(t, {0.3, 0}), InvalidTau);
  CHECK_THROWS_AS(theta_numeric(t, {0.3, -1}), InvalidTau);
}

TEST_CASE("numeric residue of 1/t") {
  const auto r = numeric_residue([](Complex t) { return 3.0 / t + t; }, 0, 0.4, 64);
  CHECK(std::abs(r - 3.0) < 1e-12);
}
