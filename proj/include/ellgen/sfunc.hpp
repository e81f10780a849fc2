#pragma once

#include <map>
#include <string>

#include "ellgen/laurent.hpp"
#include "ellgen/polynomial.hpp"

namespace ellgen {

/// Reduced rational function in s = y^(1/root_order).
///
/// Canonical form: the denominator is an ordinary polynomial whose constant
/// term is 1; any monomial factor is carried by the numerator; numerator and
/// denominator are coprime. Equality is componentwise on canonical forms.
class SFunc {
 public:
  SFunc() = default;
  SFunc(const Rational& c, int root = 1) : num_(c, root), den_(Rational(1), root) {}  // NOLINT
  explicit SFunc(SPoly p) : num_(std::move(p)), den_(Rational(1), num_.root_order()) {}
  SFunc(SPoly num, SPoly den);

  /// Wraps parts that are already canonical (no gcd is taken).
  static SFunc from_canonical(SPoly num, SPoly den);

  const SPoly& numerator() const { return num_; }
  const SPoly& denominator() const { return den_; }
  int root_order() const { return num_.is_constant() ? den_.root_order() : num_.root_order(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  SFunc with_root(int root) const;
  SFunc inverse() const;

  /// Value at s = 1 (z = 0). Throws PoleAtOne if the reduced denominator vanishes there.
  Rational value_at_one() const;

  SFunc operator-() const { return from_canonical(-num_, den_); }
  SFunc& operator+=(const SFunc& o);
  SFunc& operator-=(const SFunc& o) { return *this += -o; }
  SFunc& operator*=(const SFunc& o);
  SFunc& operator/=(const SFunc& o) { return *this *= o.inverse(); }
  SFunc& operator*=(long k) {
    if (k == 0) return *this = SFunc(Rational(0), root_order());
    num_ *= k;
    return *this;
  }

  friend SFunc operator+(SFunc a, const SFunc& b) { return a += b; }
  friend SFunc operator-(SFunc a, const SFunc& b) { return a -= b; }
  friend SFunc operator*(SFunc a, const SFunc& b) { return a *= b; }
  friend SFunc operator/(SFunc a, const SFunc& b) { return a /= b; }
  friend bool operator==(const SFunc& a, const SFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const SFunc& a, const SFunc& b) { return !(a == b); }
  friend bool is_zero(const SFunc& f) { return f.is_zero(); }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void canonicalize();

  SPoly num_;
  SPoly den_{Rational(1)};
};

/// True when a/b == c/d by cross-multiplication (independent of canonical form).
bool cross_equal(const SFunc& x, const SFunc& y);

/// Fraction whose denominator is a product of cyclotomic polynomials in s.
///
/// Every denominator produced by theta quotients is a product of factors
/// s^e - s^(-e); tracking them as cyclotomic multiplicities lets sums be formed
/// without polynomial gcds, and reduction to canonical form is trial division.
class CycloFraction {
 public:
  explicit CycloFraction(int root) : num_(Rational(0), root), root_(root) {}
  explicit CycloFraction(SPoly num) : num_(std::move(num)), root_(num_.root_order()) {}

  /// Divides by s^e - s^(-e), e != 0.
  CycloFraction& divide_by_half_binomial(long e, int power = 1);
  CycloFraction& operator*=(const SPoly& p);
  CycloFraction& operator*=(const CycloFraction& o);
  CycloFraction& operator+=(const CycloFraction& o);

  const SPoly& numerator() const { return num_; }
  const std::map<long, int>& cyclotomic_powers() const { return phi_; }

  /// Canonical SFunc (cancels every cyclotomic factor that divides the numerator).
  SFunc to_sfunc() const;

 private:
  SPoly num_;
  std::map<long, int> phi_;
  int root_;
};

}  // namespace ellgen
