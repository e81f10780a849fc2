#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ellgen/rational.hpp"

namespace ellgen {

namespace detail {
inline bool coeff_is_zero(const std::complex<double>& x) { return x == 0.0; }
template <class K>
bool coeff_is_zero(const K& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense Laurent polynomial in x = t^(1/root_order) with coefficients in K.
///
/// K needs a zero default constructor, ring operators and a free
/// `is_zero(const K&)`. Values of different root orders are rescaled to the
/// lcm of both before any binary operation; zero and constant polynomials adopt
/// the root order of the other operand without rescaling.
template <class K>
class Laurent {
 public:
  using coeff_type = K;

  Laurent() = default;
  explicit Laurent(K c, int root = 1) : root_(root) {
    if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
  }

  static Laurent monomial(K c, long exponent, int root = 1) {
    Laurent p(std::move(c), root);
    p.lo_ = p.c_.empty() ? 0 : exponent;
    return p;
  }

  /// c[i] is the coefficient of x^(lo + i).
  static Laurent from_coeffs(long lo, std::vector<K> c, int root = 1) {
    Laurent p;
    p.root_ = root;
    p.lo_ = lo;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && lo_ == 0); }
  long low() const { return lo_; }
  long high() const { return c_.empty() ? lo_ : lo_ + static_cast<long>(c_.size()) - 1; }
  int root_order() const { return root_; }
  const std::vector<K>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  K coeff(long e) const {
    if (e < lo_ || e > high() || c_.empty()) return K{};
    return c_[static_cast<std::size_t>(e - lo_)];
  }
  const K& lowest_coeff() const { return c_.front(); }
  const K& highest_coeff() const { return c_.back(); }

  /// Same value expressed with root order root_order()*factor.
  Laurent rescaled(int factor) const {
    if (factor == 1 || c_.empty()) {
      Laurent p = *this;
      p.root_ = root_ * factor;
      return p;
    }
    Laurent p;
    p.root_ = root_ * factor;
    p.lo_ = lo_ * factor;
    p.c_.assign((c_.size() - 1) * static_cast<std::size_t>(factor) + 1, K{});
    for (std::size_t i = 0; i < c_.size(); ++i) p.c_[i * static_cast<std::size_t>(factor)] = c_[i];
    return p;
  }

  /// Expresses the value with the given root order, which must be a multiple of the current one.
  Laurent with_root(int root) const {
    if (root == root_) return *this;
    if (is_constant()) {
      Laurent p = *this;
      p.root_ = root;
      return p;
    }
    if (root % root_ != 0) throw std::invalid_argument("root order is not a multiple");
    return rescaled(root / root_);
  }

  /// Inverse of rescaled(): requires every exponent to be divisible by factor.
  Laurent downscaled(int factor) const {
    if (factor == 1) return *this;
    if (root_ % factor != 0) throw std::invalid_argument("root order not divisible");
    Laurent p;
    p.root_ = root_ / factor;
    if (c_.empty()) return p;
    if (lo_ % factor != 0) throw std::invalid_argument("exponent not divisible");
    p.lo_ = lo_ / factor;
    p.c_.assign((c_.size() - 1) / static_cast<std::size_t>(factor) + 1, K{});
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i % static_cast<std::size_t>(factor) == 0) {
        p.c_[i / static_cast<std::size_t>(factor)] = c_[i];
      } else if (!ellgen_is_zero(c_[i])) {
        throw std::invalid_argument("exponent not divisible");
      }
    }
    return p;
  }

  /// Multiplies by x^e.
  Laurent shifted(long e) const {
    Laurent p = *this;
    if (!p.c_.empty()) p.lo_ += e;
    return p;
  }

  /// x -> 1/x.
  Laurent reflected() const {
    Laurent p;
    p.root_ = root_;
    if (c_.empty()) return p;
    p.lo_ = -high();
    p.c_.assign(c_.rbegin(), c_.rend());
    return p;
  }

  Laurent operator-() const {
    Laurent p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }

  Laurent& operator+=(const Laurent& o) { return accumulate(o, false); }
  Laurent& operator-=(const Laurent& o) { return accumulate(o, true); }

  Laurent& operator*=(const K& s) {
    if (ellgen_is_zero(s)) {
      c_.clear();
      lo_ = 0;
      return *this;
    }
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  Laurent& operator*=(long k) {
    if (k == 0) {
      c_.clear();
      lo_ = 0;
      return *this;
    }
    if (k == 1) return *this;
    for (auto& x : c_) x *= k;
    return *this;
  }

  Laurent& operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const K& s) { return a *= s; }
  friend Laurent operator*(const K& s, Laurent a) { return a *= s; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.root_ != b.root_ && !a.is_constant() && !b.is_constant()) {
      const int l = std::lcm(a.root_, b.root_);
      return a.with_root(l) * b.with_root(l);
    }
    Laurent r;
    r.root_ = a.is_constant() ? b.root_ : a.root_;
    if (a.c_.empty() || b.c_.empty()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ellgen_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
    if (a.root_ != b.root_) {
      if (a.is_constant() && b.is_constant()) return a.c_ == b.c_;
      const int l = std::lcm(a.root_, b.root_);
      return a.with_root(l) == b.with_root(l);
    }
    return a.lo_ == b.lo_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  friend bool is_zero(const Laurent& p) { return p.is_zero(); }

  /// Sum of coefficients, i.e. the value at x = 1.
  K value_at_one() const {
    K s{};
    for (const auto& x : c_) s += x;
    return s;
  }

  /// Value at x, for any V that K converts into.
  template <class V, class Convert>
  V evaluate(const V& x, Convert convert) const {
    V acc{};
    if (c_.empty()) return acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + convert(c_[i]);
    return acc * integer_power(x, lo_);
  }

  /// Applies f to every coefficient (keeps exponents).
  template <class F>
  auto map(F f) const -> Laurent<decltype(f(std::declval<const K&>()))> {
    using R = decltype(f(std::declval<const K&>()));
    std::vector<R> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Laurent<R>::from_coeffs(lo_, std::move(out), root_);
  }

 private:
  template <class V>
  static V integer_power(const V& x, long e) {
    V base = e < 0 ? V(1) / x : x;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    V r(1);
    while (n) {
      if (n & 1UL) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }

  static bool ellgen_is_zero(const K& x) { return detail::coeff_is_zero(x); }

  Laurent& accumulate(const Laurent& o, bool subtract) {
    if (o.c_.empty()) return *this;
    if (c_.empty()) {
      *this = subtract ? -o : o;
      return *this;
    }
    if (root_ != o.root_) {
      if (o.is_constant()) {
        // constant term only
      } else if (is_constant()) {
        root_ = o.root_;
      } else {
        const int l = std::lcm(root_, o.root_);
        *this = with_root(l);
        return accumulate(o.with_root(l), subtract);
      }
    }
    const long nlo = std::min(lo_, o.lo_);
    const long nhi = std::max(high(), o.high());
    if (nlo < lo_) c_.insert(c_.begin(), static_cast<std::size_t>(lo_ - nlo), K{});
    lo_ = nlo;
    c_.resize(static_cast<std::size_t>(nhi - nlo + 1), K{});
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      auto& dst = c_[static_cast<std::size_t>(o.lo_ - lo_) + j];
      if (subtract) dst -= o.c_[j];
      else dst += o.c_[j];
    }
    trim();
    return *this;
  }

  void trim() {
    std::size_t first = 0;
    while (first < c_.size() && ellgen_is_zero(c_[first])) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    std::size_t last = c_.size();
    while (ellgen_is_zero(c_[last - 1])) --last;
    if (first > 0 || last < c_.size()) {
      c_ = std::vector<K>(std::make_move_iterator(c_.begin() + static_cast<long>(first)),
                          std::make_move_iterator(c_.begin() + static_cast<long>(last)));
      lo_ += static_cast<long>(first);
    }
  }

  int root_ = 1;
  long lo_ = 0;
  std::vector<K> c_;
};

/// Laurent polynomial in s = y^(1/root_order) with rational coefficients.
using SPoly = Laurent<Rational>;

/// s^e - s^(-e): the leading factor of the normalized theta at argument (e/root)·z.
inline SPoly half_binomial(long e, int root) {
  return SPoly::monomial(Rational(1), e, root) - SPoly::monomial(Rational(1), -e, root);
}

}  // namespace ellgen
