#pragma once

#include <array>

#include "ellgen/graded.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/sfunc.hpp"
#include "ellgen/surface.hpp"

namespace ellgen {

/// Argument of a theta factor as a multiple of z: (y + eps*w)·z.
struct Arg {
  Rational y{0};
  Rational w{0};

  Arg() = default;
  Arg(Rational y_, Rational w_ = Rational(0)) : y(std::move(y_)), w(std::move(w_)) {}  // NOLINT
  bool is_zero() const { return sgn(y) == 0 && sgn(w) == 0; }
  Arg operator-() const { return Arg(-y, -w); }
};

/// Coefficients in s = y^(1/root_s).
struct UniRing {
  using K = SPoly;
  int root_s = 2;

  /// c·X^j with X = y^(x.y).
  K mono(const Arg& x, const Rational& j, const Rational& c) const;
  K zero() const { return K(Rational(0), root_s); }
  K scale(const K& k, const Rational& c) const { return k * c; }
};

/// Coefficients in r = w^(1/root_r) over s = y^(1/root_s).
struct BiRing {
  using K = Laurent<SPoly>;
  int root_s = 2;
  int root_r = 2;

  K mono(const Arg& x, const Rational& j, const Rational& c) const;
  K zero() const { return K(SPoly(Rational(0), root_s), root_r); }
  K scale(const K& k, const Rational& c) const {
    return k.map([&](const SPoly& p) { return p * c; });
  }
};

/// Polynomial in a nilpotent class D, truncated after D².
template <class T>
using DPoly = std::array<T, 3>;

template <class T>
DPoly<T> dmul(const DPoly<T>& a, const DPoly<T>& b) {
  return {a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

/// Inverse of a D-polynomial whose constant term is a unit series.
template <class C>
DPoly<QSeries<C>> dinvert(const DPoly<QSeries<C>>& a) {
  const auto i0 = qs_invert(a[0]);
  const auto i00 = i0 * i0;
  return {i0, -(a[1] * i00), (a[1] * a[1] * i0 - a[2]) * i00};
}

/// ∏_{n≥1}(1-qⁿv)(1-qⁿ/v)/(1-qⁿ)² with v a formal variable (root order 1).
const QSeries<SPoly>& unit_series(int order);

/// Σ c_j X^j, Σ j c_j X^j and Σ (j²/2) c_j X^j for P(v) = Σ c_j v^j at v = X.
template <class Ring>
DPoly<typename Ring::K> substitute(const Ring& ring, const SPoly& p, const Arg& x) {
  DPoly<typename Ring::K> out{ring.zero(), ring.zero(), ring.zero()};
  for (long j = p.low(); j <= p.high(); ++j) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(j - p.low())];
    if (sgn(c) == 0) continue;
    const Rational rj(j);
    out[0] += ring.mono(x, rj, c);
    if (j != 0) {
      out[1] += ring.mono(x, rj, c * rj);
      out[2] += ring.mono(x, rj, c * rj * rj / 2);
    }
  }
  return out;
}

/// Leading factor X^(1/2) - X^(-1/2) of σ at a pure argument.
template <class Ring>
typename Ring::K lead_pure(const Ring& ring, const Arg& x) {
  return ring.mono(x, Rational(1, 2), Rational(1)) - ring.mono(x, Rational(-1, 2), Rational(1));
}

/// Leading factor at v = X·e^D, expanded through D².
template <class Ring>
DPoly<typename Ring::K> lead_shifted(const Ring& ring, const Arg& x) {
  auto h = ring.mono(x, Rational(1, 2), Rational(1));
  auto hi = ring.mono(x, Rational(-1, 2), Rational(1));
  auto minus = h - hi;
  return {minus, ring.scale(h + hi, Rational(1, 2)), ring.scale(minus, Rational(1, 8))};
}

/// Unit part of σ at v = X·e^D; the D⁰ term is the pure unit series.
template <class Ring>
DPoly<QSeries<typename Ring::K>> unit_shifted(const Ring& ring, const Arg& x, int order) {
  const auto& u = unit_series(order);
  DPoly<QSeries<typename Ring::K>> out{QSeries<typename Ring::K>(order), QSeries<typename Ring::K>(order),
                                      QSeries<typename Ring::K>(order)};
  for (int k = 0; k <= order; ++k) {
    auto parts = substitute(ring, u[k], x);
    for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)][k] = std::move(parts[static_cast<std::size_t>(i)]);
  }
  return out;
}

template <class Ring>
QSeries<typename Ring::K> unit_pure(const Ring& ring, const Arg& x, int order) {
  const auto& u = unit_series(order);
  QSeries<typename Ring::K> out(order);
  for (int k = 0; k <= order; ++k) out[k] = substitute(ring, u[k], x)[0];
  return out;
}

/// Φ(W) = W·σ(W - z)/σ(W) expanded through W², as q-series.
template <class Ring>
DPoly<QSeries<typename Ring::K>> chern_factor(const Ring& ring, int order) {
  using S = QSeries<typename Ring::K>;
  auto lead = lead_shifted(ring, Arg(-1));
  lead[2] = lead[2] - ring.scale(lead[0], Rational(1, 24));  // W/(e^(W/2)-e^(-W/2)) = 1 - W²/24
  auto unit = dmul(unit_shifted(ring, Arg(-1), order), dinvert(unit_shifted(ring, Arg(0), order)));
  DPoly<S> lifted{S::constant(lead[0], order), S::constant(lead[1], order), S::constant(lead[2], order)};
  return dmul(lifted, unit);
}

/// Places a D-polynomial in direction `index` of the graded ring (D·D = self).
template <class T>
Graded<T> along(const DPoly<T>& p, std::size_t index, std::size_t basis, long self, const T& zero) {
  Graded<T> g(basis, zero);
  g.deg0 = p[0];
  g.deg1[index] = p[1];
  g.deg2 = p[2];
  g.deg2 *= self;
  return g;
}

/// Smallest root order 2N for which y^(a/2) is an integral power of s for all a.
int root_order_for(const std::vector<Rational>& values);

/// σ(a·z) as an exact series in s = y^(1/root); root 0 picks 2·den(a).
QSeries<SPoly> sigma_pure(const Rational& a, int order, int root = 0);

/// σ(D + a·z) with D a divisor class; deg0 equals sigma_pure(a).
Graded<QSeries<SPoly>> sigma_shifted(const SurfaceModel& model, const CohomClass& d, const Rational& a, int order,
                                     int root = 0);

/// Φ₀, Φ₁, Φ₂ with root order 2.
std::array<QSeries<SPoly>, 3> chern_genus_coeffs(int order);

/// σ((a+2)z)σ(az)/σ((a+1)z)² as pieces: the q-series numerator for each power
/// of q is lead·unit[k], to be divided by the square of the half binomial.
struct PhiParts {
  SPoly lead;
  QSeries<SPoly> unit;
  long half_exponent = 0;  ///< s^e - s^(-e) is the denominator factor, squared
};
PhiParts phi_parts(const Rational& a, int order, int root);

/// φ(a) as canonical rational functions; φ(0) = φ(-2) = 0.
QSeries<SFunc> phi_correction(const Rational& a, int order, int root = 0);

}  // namespace ellgen
