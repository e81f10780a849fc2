#include "ellgen/sfunc.hpp"

#include <numeric>
#include <stdexcept>

#include "ellgen/errors.hpp"

namespace ellgen {

SFunc::SFunc(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("SFunc with zero denominator");
  canonicalize();
}

SFunc SFunc::from_canonical(SPoly num, SPoly den) {
  SFunc f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  return f;
}

void SFunc::canonicalize() {
  int root = root_order();
  if (num_.root_order() != den_.root_order() && !num_.is_constant() && !den_.is_constant()) {
    root = std::lcm(num_.root_order(), den_.root_order());
  }
  num_ = num_.with_root(root);
  den_ = den_.with_root(root);
  if (num_.is_zero()) {
    num_ = SPoly(Rational(0), root);
    den_ = SPoly(Rational(1), root);
    return;
  }
  long sn = 0, sd = 0;
  SPoly n = strip_monomial(num_, &sn);
  SPoly d = strip_monomial(den_, &sd);
  if (!d.is_constant()) {
    SPoly g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = *exact_divide(n, g);
      d = *exact_divide(d, g);
    }
  }
  const Rational lead = d.lowest_coeff();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted(sn - sd).with_root(root);
  den_ = d.with_root(root);
}

SFunc SFunc::with_root(int root) const { return from_canonical(num_.with_root(root), den_.with_root(root)); }

SFunc SFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero SFunc");
  return SFunc(den_, num_);
}

Rational SFunc::value_at_one() const {
  const Rational d = den_.value_at_one();
  if (sgn(d) == 0) throw PoleAtOne("denominator " + render(den_) + " vanishes at s = 1");
  return num_.value_at_one() / d;
}

SFunc& SFunc::operator+=(const SFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ += o.num_;
      if (num_.is_zero()) *this = SFunc(Rational(0), den_.root_order());
      return *this;
    }
    *this = SFunc(num_ + o.num_, den_);
    return *this;
  }
  *this = SFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

SFunc& SFunc::operator*=(const SFunc& o) {
  if (is_zero() || o.is_zero()) return *this = SFunc(Rational(0), root_order());
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  *this = SFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

std::string SFunc::to_string() const {
  if (den_.is_constant()) return render(num_);
  return "(" + render(num_) + ")/(" + render(den_) + ")";
}

bool cross_equal(const SFunc& x, const SFunc& y) {
  return x.numerator() * y.denominator() == y.numerator() * x.denominator();
}

CycloFraction& CycloFraction::divide_by_half_binomial(long e, int power) {
  if (e == 0) throw std::domain_error("division by s^0 - s^0");
  // 1/(s^e - s^-e) = s^e / (s^(2e) - 1) = s^e / prod_{d | 2e} Φ_d(s)
  const bool negative = e < 0;
  const long a = negative ? -e : e;
  for (int k = 0; k < power; ++k) {
    num_ = num_.shifted(a);
    if (negative) num_ = -num_;
  }
  for (long d = 1; d <= 2 * a; ++d)
    if ((2 * a) % d == 0) phi_[d] += power;
  return *this;
}

CycloFraction& CycloFraction::operator*=(const SPoly& p) {
  num_ = num_ * p;
  return *this;
}

CycloFraction& CycloFraction::operator*=(const CycloFraction& o) {
  num_ = num_ * o.num_;
  for (const auto& [d, k] : o.phi_) phi_[d] += k;
  return *this;
}

CycloFraction& CycloFraction::operator+=(const CycloFraction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  SPoly mine = num_, theirs = o.num_;
  std::map<long, int> joint = phi_;
  for (const auto& [d, k] : o.phi_) {
    int& j = joint[d];
    if (k > j) j = k;
  }
  for (const auto& [d, k] : joint) {
    auto mine_it = phi_.find(d);
    auto their_it = o.phi_.find(d);
    const int km = mine_it == phi_.end() ? 0 : mine_it->second;
    const int kt = their_it == o.phi_.end() ? 0 : their_it->second;
    const SPoly phi = cyclotomic(d, root_);
    for (int i = km; i < k; ++i) mine = mine * phi;
    for (int i = kt; i < k; ++i) theirs = theirs * phi;
  }
  num_ = mine + theirs;
  phi_ = std::move(joint);
  return *this;
}

SFunc CycloFraction::to_sfunc() const {
  if (num_.is_zero()) return SFunc(Rational(0), root_);
  SPoly n = num_;
  SPoly den(Rational(1), root_);
  for (const auto& [d, k] : phi_) {
    const SPoly phi = cyclotomic(d, root_);
    int left = k;
    while (left > 0) {
      auto q = exact_divide(n, phi);
      if (!q) break;
      n = std::move(*q);
      --left;
    }
    for (int i = 0; i < left; ++i) den = den * phi;
  }
  const Rational lead = den.lowest_coeff();
  if (lead != 1) {
    n *= Rational(1) / lead;
    den *= Rational(1) / lead;
  }
  return SFunc::from_canonical(n.with_root(root_), den.with_root(root_));
}

}  // namespace ellgen
