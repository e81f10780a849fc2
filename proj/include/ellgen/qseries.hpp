#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellgen/errors.hpp"
#include "ellgen/laurent.hpp"
#include "ellgen/sfunc.hpp"

namespace ellgen {

/// Inverse of a coefficient when it is a unit of its ring.
inline std::optional<Rational> unit_inverse(const Rational& x) {
  if (sgn(x) == 0) return std::nullopt;
  return Rational(1) / x;
}
inline std::optional<SFunc> unit_inverse(const SFunc& x) {
  if (x.is_zero()) return std::nullopt;
  return x.inverse();
}
/// Laurent polynomials are units only when they are a single unit-coefficient monomial.
template <class K>
std::optional<Laurent<K>> unit_inverse(const Laurent<K>& x) {
  if (x.size() != 1) return std::nullopt;
  auto c = unit_inverse(x.lowest_coeff());
  if (!c) return std::nullopt;
  return Laurent<K>::monomial(*c, -x.low(), x.root_order());
}

/// Power series in q truncated after q^order, coefficients in C.
template <class C>
class QSeries {
 public:
  QSeries() : c_(1) {}
  explicit QSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

  static QSeries constant(C c, int order) {
    QSeries s(order);
    s.c_[0] = std::move(c);
    return s;
  }
  static QSeries from_coeffs(std::vector<C> c) {
    QSeries s(static_cast<int>(c.size()) - 1);
    s.c_ = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  C& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<C>& coeffs() const { return c_; }

  /// Checked access; throws OutOfRange outside 0..order().
  const C& coefficient(int k) const {
    if (k < 0 || k > order())
      throw OutOfRange("q^" + std::to_string(k) + " outside 0.." + std::to_string(order()));
    return c_[static_cast<std::size_t>(k)];
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!detail::coeff_is_zero(x)) return false;
    return true;
  }

  QSeries truncated(int order) const {
    QSeries s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = (*this)[k];
    return s;
  }

  template <class F>
  auto map(F f) const -> QSeries<decltype(f(std::declval<const C&>()))> {
    using R = decltype(f(std::declval<const C&>()));
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return QSeries<R>::from_coeffs(std::move(out));
  }

  QSeries operator-() const {
    QSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
  }
  QSeries& operator+=(const QSeries& o) {
    align(o);
    for (int k = 0; k <= order(); ++k) c_[static_cast<std::size_t>(k)] += o[k];
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    align(o);
    for (int k = 0; k <= order(); ++k) c_[static_cast<std::size_t>(k)] -= o[k];
    return *this;
  }
  QSeries& operator*=(const C& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  QSeries& operator*=(long k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const C& s) { return a *= s; }
  friend QSeries operator*(QSeries a, long k) { return a *= k; }

  /// Cauchy product truncated at the smaller order.
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (detail::coeff_is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (detail::coeff_is_zero(b[j])) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
      if (!(a[k] == b[k])) return false;
    return true;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }
  friend bool is_zero(const QSeries& s) { return s.is_zero(); }

 private:
  void align(const QSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
  }

  std::vector<C> c_;
};

/// Multiplicative inverse up to the truncation order. Throws NonUnitLeadingTerm
/// when the q^0 coefficient is not a unit of the coefficient ring.
template <class C>
QSeries<C> qs_invert(const QSeries<C>& a) {
  auto inv0 = unit_inverse(a[0]);
  if (!inv0) throw NonUnitLeadingTerm("q^0 coefficient is not invertible");
  QSeries<C> b(a.order());
  b[0] = *inv0;
  for (int k = 1; k <= a.order(); ++k) {
    C acc{};
    for (int j = 1; j <= k; ++j) {
      if (detail::coeff_is_zero(a[j]) || detail::coeff_is_zero(b[k - j])) continue;
      acc += a[j] * b[k - j];
    }
    b[k] = -(acc * *inv0);
  }
  return b;
}

template <class C>
QSeries<C> qs_mul(const QSeries<C>& a, const QSeries<C>& b) {
  return a * b;
}

template <class C>
const C& qs_coefficient(const QSeries<C>& a, int k) {
  return a.coefficient(k);
}

/// One line per power: "q^k: <coefficient>".
inline std::string render(const QSeries<SFunc>& s) {
  std::ostringstream out;
  for (int k = 0; k <= s.order(); ++k) out << "q^" << k << ": " << s[k].to_string() << "\n";
  return out.str();
}

}  // namespace ellgen
