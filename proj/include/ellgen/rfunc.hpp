#pragma once

#include <string>

#include "ellgen/sfunc.hpp"

namespace ellgen {

/// Laurent polynomial in r = w^(1/root_order) with SFunc coefficients.
using RPoly = Laurent<SFunc>;

/// Rational function in r over the field of SFuncs: the perturbation layer,
/// with w = y^eps so that y^(eps*b) = w^b is exact.
///
/// Canonical form mirrors SFunc: numerator and denominator coprime in r (gcd
/// over the fraction field of s), monomials moved to the numerator, lowest
/// denominator coefficient equal to 1.
class RFunc {
 public:
  RFunc() = default;
  RFunc(const SFunc& c, int root = 1) : num_(c, root), den_(SFunc(Rational(1)), root) {}  // NOLINT
  RFunc(RPoly num, RPoly den, bool reduce = true);

  const RPoly& numerator() const { return num_; }
  const RPoly& denominator() const { return den_; }
  int root_order() const { return num_.is_constant() ? den_.root_order() : num_.root_order(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Value at w = 1 (eps -> 0). Throws PoleAtOne when the reduced denominator vanishes there.
  SFunc limit_at_one() const;

  RFunc reduced() const { return RFunc(num_, den_, true); }
  RFunc inverse() const;

  RFunc operator-() const;
  RFunc& operator+=(const RFunc& o);
  RFunc& operator-=(const RFunc& o) { return *this += -o; }
  RFunc& operator*=(const RFunc& o);
  RFunc& operator/=(const RFunc& o) { return *this *= o.inverse(); }
  friend RFunc operator+(RFunc a, const RFunc& b) { return a += b; }
  friend RFunc operator-(RFunc a, const RFunc& b) { return a -= b; }
  friend RFunc operator*(RFunc a, const RFunc& b) { return a *= b; }
  friend RFunc operator/(RFunc a, const RFunc& b) { return a /= b; }

  /// Equality by cross-multiplication, so unreduced values compare correctly.
  friend bool operator==(const RFunc& a, const RFunc& b);
  friend bool operator!=(const RFunc& a, const RFunc& b) { return !(a == b); }
  friend bool is_zero(const RFunc& f) { return f.is_zero(); }

  std::string to_string() const;

 private:
  void canonicalize();

  RPoly num_;
  RPoly den_{SFunc(Rational(1))};
};

/// lim_{w -> 1} f. Exact; throws PoleAtOne when the limit does not exist.
SFunc rfunc_limit_w1(const RFunc& f);

/// Rational value at s = 1 (holomorphy-at-z=0 test of a single coefficient).
Rational sfunc_eval_at_s1(const SFunc& f);

}  // namespace ellgen
