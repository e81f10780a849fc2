#include "ellgen/rfunc.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "ellgen/errors.hpp"

namespace ellgen {

namespace {

using Dense = std::vector<SFunc>;  // ascending coefficients, trimmed

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense dense(const RPoly& p) {
  Dense d(p.coeffs().begin(), p.coeffs().end());
  trim(d);
  return d;
}

/// Remainder of a modulo b over the SFunc field; quotient returned through q.
Dense divmod(Dense a, const Dense& b, Dense* q) {
  const std::size_t db = b.size() - 1;
  const SFunc inv_lead = b.back().inverse();
  if (q) q->assign(a.size() >= b.size() ? a.size() - db : 0, SFunc());
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const SFunc c = a.back() * inv_lead;
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense monic(Dense p) {
  const SFunc inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

}  // namespace

RFunc::RFunc(RPoly num, RPoly den, bool reduce) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RFunc with zero denominator");
  if (reduce) canonicalize();
}

void RFunc::canonicalize() {
  int root = root_order();
  if (!num_.is_constant() && !den_.is_constant()) root = std::lcm(num_.root_order(), den_.root_order());
  if (num_.is_zero()) {
    num_ = RPoly(SFunc(Rational(0)), root);
    den_ = RPoly(SFunc(Rational(1)), root);
    return;
  }
  RPoly n = num_.with_root(root), d = den_.with_root(root);
  const long sn = n.low(), sd = d.low();
  Dense a = dense(n.shifted(-sn)), b = dense(d.shifted(-sd));
  if (b.size() > 1 && a.size() > 1) {
    Dense x = a, y = b;
    while (!y.empty()) {
      Dense r = divmod(x, y, nullptr);
      x = std::move(y);
      y = std::move(r);
    }
    if (x.size() > 1) {
      const Dense g = monic(x);
      Dense qa, qb;
      divmod(a, g, &qa);
      divmod(b, g, &qb);
      a = std::move(qa);
      b = std::move(qb);
    }
  }
  const SFunc inv = b.front().inverse();
  for (auto& c : a) c *= inv;
  for (auto& c : b) c *= inv;
  num_ = RPoly::from_coeffs(sn - sd, std::move(a), root);
  den_ = RPoly::from_coeffs(0, std::move(b), root);
}

namespace {

/// m-th Taylor coefficient at r = 1, i.e. Σ_e c_e·C(e, m).
SFunc taylor_at_one(const RPoly& p, long m) {
  SFunc acc(Rational(0));
  for (long e = p.low(); e <= p.high(); ++e) {
    const SFunc& c = p.coeffs()[static_cast<std::size_t>(e - p.low())];
    if (c.is_zero()) continue;
    const Rational b = binomial(e, m);
    if (sgn(b) != 0) acc += c * SFunc(b);
  }
  return acc;
}

}  // namespace

SFunc RFunc::limit_at_one() const {
  // Expanding both sides in t = r - 1 gives the limit without a gcd: the
  // first nonzero Taylor coefficient of the denominator fixes the pole order.
  const long max_order = static_cast<long>(den_.size());
  for (long m = 0; m <= max_order; ++m) {
    const SFunc d = taylor_at_one(den_, m);
    if (d.is_zero()) {
      if (!taylor_at_one(num_, m).is_zero()) throw PoleAtOne("denominator vanishes at w = 1 to higher order");
      continue;
    }
    return taylor_at_one(num_, m) / d;
  }
  throw PoleAtOne("denominator vanishes identically near w = 1");
}

RFunc RFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero RFunc");
  return RFunc(den_, num_);
}

RFunc RFunc::operator-() const { return RFunc(-num_, den_, false); }

RFunc& RFunc::operator+=(const RFunc& o) {
  if (den_ == o.den_) return *this = RFunc(num_ + o.num_, den_);
  return *this = RFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RFunc& RFunc::operator*=(const RFunc& o) { return *this = RFunc(num_ * o.num_, den_ * o.den_); }

bool operator==(const RFunc& a, const RFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RFunc::to_string() const {
  auto show = [this](const RPoly& p) {
    if (p.is_zero()) return std::string("0");
    std::string out;
    for (long e = p.low(); e <= p.high(); ++e) {
      const SFunc c = p.coeff(e);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      Rational ex(e, p.root_order());
      ex.canonicalize();
      out += "[" + c.to_string() + "]";
      if (sgn(ex) != 0) out += "*w^(" + ellgen::to_string(ex) + ")";
    }
    return out;
  };
  if (den_.is_constant() && den_.coeff(0) == SFunc(Rational(1))) return show(num_);
  return "(" + show(num_) + ")/(" + show(den_) + ")";
}

SFunc rfunc_limit_w1(const RFunc& f) { return f.limit_at_one(); }

Rational sfunc_eval_at_s1(const SFunc& f) { return f.value_at_one(); }

}  // namespace ellgen
