#pragma once

#include <Eigen/Core>
#include <vector>

#include "ellgen/laurent.hpp"

namespace ellgen {

/// Integer matrices: intersection pairings and their extensions by K.
using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// Element of T ⊗ H^even(X) truncated above the point class.
///
/// deg1 holds coordinates over a basis of divisor classes; products of two
/// divisors are resolved through a symmetric integer pairing on that basis.
template <class T>
struct Graded {
  T deg0{};
  std::vector<T> deg1;
  T deg2{};

  Graded() = default;
  Graded(std::size_t basis, const T& zero) : deg0(zero), deg1(basis, zero), deg2(zero) {}

  static Graded scalar(std::size_t basis, const T& value, const T& zero) {
    Graded g(basis, zero);
    g.deg0 = value;
    return g;
  }

  std::size_t basis_size() const { return deg1.size(); }

  Graded& operator+=(const Graded& o) {
    deg0 += o.deg0;
    for (std::size_t i = 0; i < deg1.size(); ++i) deg1[i] += o.deg1[i];
    deg2 += o.deg2;
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    deg0 -= o.deg0;
    for (std::size_t i = 0; i < deg1.size(); ++i) deg1[i] -= o.deg1[i];
    deg2 -= o.deg2;
    return *this;
  }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
};

/// Pairing Σ_ij a_i form(i,j) b_j. Integer combinations are formed on the
/// sparser side so that only one ring product per nonzero entry is needed.
template <class T>
T pair(const std::vector<T>& a, const std::vector<T>& b, const IntMatrix& form, const T& zero) {
  const std::size_t n = a.size();
  std::vector<std::size_t> nza, nzb;
  for (std::size_t i = 0; i < n; ++i) {
    if (!detail::coeff_is_zero(a[i])) nza.push_back(i);
    if (!detail::coeff_is_zero(b[i])) nzb.push_back(i);
  }
  const bool outer_a = nza.size() <= nzb.size();
  const auto& outer = outer_a ? nza : nzb;
  const auto& inner = outer_a ? nzb : nza;
  const auto& x = outer_a ? a : b;
  const auto& y = outer_a ? b : a;
  T acc = zero;
  for (auto i : outer) {
    T col = zero;
    bool any = false;
    for (auto j : inner) {
      const long f = form(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (f == 0) continue;
      T term = y[j];
      term *= f;
      col += term;
      any = true;
    }
    if (any) acc += x[i] * col;
  }
  return acc;
}

/// Product truncated above degree 2.
template <class T>
Graded<T> multiply(const Graded<T>& a, const Graded<T>& b, const IntMatrix& form, const T& zero) {
  Graded<T> r(a.basis_size(), zero);
  r.deg0 = a.deg0 * b.deg0;
  for (std::size_t i = 0; i < a.deg1.size(); ++i) {
    const bool za = detail::coeff_is_zero(a.deg1[i]);
    const bool zb = detail::coeff_is_zero(b.deg1[i]);
    if (za && zb) continue;
    T c = zero;
    if (!zb) c += a.deg0 * b.deg1[i];
    if (!za) c += a.deg1[i] * b.deg0;
    r.deg1[i] = std::move(c);
  }
  r.deg2 = a.deg0 * b.deg2 + a.deg2 * b.deg0 + pair(a.deg1, b.deg1, form, zero);
  return r;
}

}  // namespace ellgen
