#pragma once

#include <complex>
#include <functional>

#include "ellgen/genus.hpp"
#include "ellgen/theta.hpp"

namespace ellgen {

using Complex = std::complex<double>;

/// q^(1/8)·2 sin(πt)·∏(1-qⁿ)(1-qⁿe^(2πit))(1-qⁿe^(-2πit)), q = e^(2πiτ).
/// The product stops once |q|ⁿ drops below tol. Throws InvalidTau unless Im τ > 0.
Complex theta_numeric(Complex t, Complex tau, double tol = 1e-18);

/// ϑ'(0, τ).
Complex theta_prime_zero(Complex tau, double tol = 1e-18);

/// σ(t): the theta function without its t-independent prefactor.
Complex sigma_numeric(Complex t, Complex tau, double tol = 1e-18);

/// σ at v = e^(2πit)·e^D, through D².
DPoly<Complex> sigma_numeric_shifted(Complex t, Complex tau, double tol = 1e-18);

/// (1/2πi)∮ f over the circle |t - center| = radius, trapezoidal rule.
Complex numeric_residue(const std::function<Complex(Complex)>& f, Complex center, double radius, int samples);

/// Value of an exact coefficient at y = e^(2πiz).
Complex evaluate(const SPoly& p, Complex z);
Complex evaluate(const SFunc& f, Complex z);
template <class C>
Complex evaluate(const QSeries<C>& s, Complex z, Complex tau) {
  const Complex q = std::exp(Complex(0, 2 * M_PI) * tau);
  Complex acc = 0, qk = 1;
  for (int k = 0; k <= s.order(); ++k, qk *= q) acc += qk * evaluate(s[k], z);
  return acc;
}

/// φ(a) at (z, τ).
Complex phi_numeric(const Rational& a, Complex z, Complex tau);

/// Ell_nv and Ell evaluated directly from theta products (no q-truncation).
Complex ell_naive_numeric(const SurfaceModel& model, const Coefficients& coeffs, Complex z, Complex tau);
Complex ell_numeric(const SurfaceModel& model, const Coefficients& coeffs, Complex z, Complex tau,
                    const Interpretation& how = {});

}  // namespace ellgen
