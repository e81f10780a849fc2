#include "ellgen/theta_numeric.hpp"

#include <cmath>

namespace ellgen {

namespace {

constexpr Complex kTwoPiI(0, 2 * M_PI);

Complex nome(Complex tau) {
  if (!(tau.imag() > 0)) throw InvalidTau("Im(tau) must be positive");
  return std::exp(kTwoPiI * tau);
}

int terms_for(Complex q, double tol) {
  const double a = std::abs(q);
  if (a == 0) return 0;
  return static_cast<int>(std::ceil(std::log(tol) / std::log(a))) + 1;
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace

Complex theta_numeric(Complex t, Complex tau, double tol) {
  const Complex q = nome(tau);
  const Complex v = std::exp(kTwoPiI * t);
  Complex p = std::exp(kTwoPiI * tau / 8.0) * 2.0 * std::sin(M_PI * t);
  Complex qn = 1;
  for (int n = 1, N = terms_for(q, tol); n <= N; ++n) {
    qn *= q;
    p *= (1.0 - qn) * (1.0 - qn * v) * (1.0 - qn / v);
  }
  return p;
}

Complex theta_prime_zero(Complex tau, double tol) {
  const Complex q = nome(tau);
  Complex p = std::exp(kTwoPiI * tau / 8.0) * 2.0 * M_PI;
  Complex qn = 1;
  for (int n = 1, N = terms_for(q, tol); n <= N; ++n) {
    qn *= q;
    p *= std::pow(1.0 - qn, 3);
  }
  return p;
}

Complex sigma_numeric(Complex t, Complex tau, double tol) {
  const Complex q = nome(tau);
  const Complex v = std::exp(kTwoPiI * t);
  const Complex h = std::exp(Complex(0, M_PI) * t);
  Complex p = h - 1.0 / h;
  Complex qn = 1;
  for (int n = 1, N = terms_for(q, tol); n <= N; ++n) {
    qn *= q;
    p *= (1.0 - qn * v) * (1.0 - qn / v) / ((1.0 - qn) * (1.0 - qn));
  }
  return p;
}

DPoly<Complex> sigma_numeric_shifted(Complex t, Complex tau, double tol) {
  const Complex q = nome(tau);
  const Complex v = std::exp(kTwoPiI * t);
  const Complex h = std::exp(Complex(0, M_PI) * t);
  const DPoly<Complex> lead{h - 1.0 / h, (h + 1.0 / h) / 2.0, (h - 1.0 / h) / 8.0};
  // log U(v e^D) differentiated in D: each factor 1 - c e^(±D) gives
  // ∓c e^(±D)/(1 - c e^(±D)) and -c e^(±D)/(1 - c e^(±D))².
  Complex u0 = 1, l1 = 0, l2 = 0, qn = 1;
  for (int n = 1, N = terms_for(q, tol); n <= N; ++n) {
    qn *= q;
    const Complex a = qn * v, b = qn / v;
    u0 *= (1.0 - a) * (1.0 - b) / ((1.0 - qn) * (1.0 - qn));
    l1 += -a / (1.0 - a) + b / (1.0 - b);
    l2 += -a / ((1.0 - a) * (1.0 - a)) - b / ((1.0 - b) * (1.0 - b));
  }
  const DPoly<Complex> unit{u0, u0 * l1, u0 * (l1 * l1 + l2) / 2.0};
  return dmul(lead, unit);
}

Complex numeric_residue(const std::function<Complex(Complex)>& f, Complex center, double radius, int samples) {
  Complex acc = 0;
  for (int k = 0; k < samples; ++k) {
    const Complex e = std::exp(Complex(0, 2 * M_PI * k / samples));
    acc += f(center + radius * e) * radius * e;
  }
  return acc / static_cast<double>(samples);
}

Complex evaluate(const SPoly& p, Complex z) {
  const Complex s = std::exp(kTwoPiI * z / static_cast<double>(p.root_order()));
  Complex acc = 0;
  for (long e = p.low(); e <= p.high() && !p.is_zero(); ++e) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(e - p.low())];
    if (sgn(c) != 0) acc += to_double(c) * std::pow(s, static_cast<int>(e));
  }
  return acc;
}

Complex evaluate(const SFunc& f, Complex z) { return evaluate(f.numerator(), z) / evaluate(f.denominator(), z); }

Complex phi_numeric(const Rational& a, Complex z, Complex tau) {
  const double x = to_double(a);
  const Complex s1 = sigma_numeric((x + 1) * z, tau);
  return sigma_numeric((x + 2) * z, tau) * sigma_numeric(x * z, tau) / (s1 * s1);
}

namespace {

DPoly<Complex> dinv(const DPoly<Complex>& a) {
  const Complex i0 = 1.0 / a[0];
  return {i0, -a[1] * i0 * i0, (a[1] * a[1] * i0 - a[2]) * i0 * i0};
}

}  // namespace

Complex ell_naive_numeric(const SurfaceModel& model, const Coefficients& coeffs, Complex z, Complex tau) {
  const std::size_t n = model.size();
  const IntMatrix form = model.pairing_form();

  // Φ(W) = W σ(W - z)/σ(W), and W/σ(W) = (1 - W²/24)/U(W) with U the unit
  // part at v = e^W: U = 1 + (l2/2) W², l2 = -2 Σ qⁿ/(1 - qⁿ)².
  const Complex q = nome(tau);
  Complex l2 = 0, qn = 1;
  for (int k = 1, N = terms_for(q, 1e-18); k <= N; ++k) {
    qn *= q;
    l2 += -2.0 * qn / ((1.0 - qn) * (1.0 - qn));
  }
  const DPoly<Complex> unit0{1.0, 0.0, l2 / 2.0};
  const DPoly<Complex> w_over{1.0, 0.0, -1.0 / 24.0};
  const auto phi = dmul(dmul(sigma_numeric_shifted(-z, tau), w_over), dinv(unit0));

  Graded<Complex> acc(n + 1, 0.0);
  acc.deg0 = phi[0] * phi[0];
  acc.deg1[n] = -phi[0] * phi[1];
  acc.deg2 = phi[1] * phi[1] * static_cast<double>(model.c2) +
             phi[0] * phi[2] * static_cast<double>(model.c1sq - 2 * model.c2);

  for (const auto& f : naive_factors(model, coeffs)) {
    const double al = to_double(f.alpha.y), be = to_double(f.beta.y), ga = to_double(f.gamma.y),
                 de = to_double(f.delta.y);
    auto p = dmul(sigma_numeric_shifted(al * z, tau), dinv(sigma_numeric_shifted(ga * z, tau)));
    const Complex scalar = sigma_numeric(be * z, tau) / sigma_numeric(de * z, tau);
    for (auto& x : p) x *= scalar;
    acc = multiply(acc, along(p, f.curve, n + 1, model.dot(f.curve, f.curve), Complex(0)), form, Complex(0));
  }
  return acc.deg2;
}

Complex ell_numeric(const SurfaceModel& model, const Coefficients& coeffs, Complex z, Complex tau,
                    const Interpretation& how) {
  Complex v = ell_naive_numeric(model, coeffs, z, tau);
  for (const auto& [a, w] : correction_weights(graph_from(model, coeffs), how)) {
    if (sgn(a) == 0 || a == -2) continue;
    v += w.get_d() * phi_numeric(a, z, tau);
  }
  return v;
}

}  // namespace ellgen
