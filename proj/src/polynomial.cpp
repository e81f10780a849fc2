#include "ellgen/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace ellgen {

namespace {

using ZPoly = std::vector<Integer>;  // ascending, trimmed

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Integer multiple of a polynomial with lowest exponent 0.
ZPoly to_zpoly(const SPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  ZPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
  trim(out);
  return out;
}

/// Pseudo-remainder of a by b (deg a >= deg b).
ZPoly prem(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

SPoly strip_monomial(const SPoly& p, long* shift) {
  if (shift) *shift = p.is_zero() ? 0 : p.low();
  return p.shifted(p.is_zero() ? 0 : -p.low());
}

SPoly poly_gcd(const SPoly& a_in, const SPoly& b_in) {
  const int root = a_in.is_constant() ? b_in.root_order() : a_in.root_order();
  ZPoly a = to_zpoly(strip_monomial(a_in));
  ZPoly b = to_zpoly(strip_monomial(b_in));
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {
      a = {Integer(1)};
      break;
    }
    ZPoly r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return SPoly(Rational(0), root);
  make_primitive(a);
  std::vector<Rational> c;
  c.reserve(a.size());
  for (auto& x : a) c.emplace_back(x);
  return SPoly::from_coeffs(0, std::move(c), root);
}

std::optional<SPoly> exact_divide(const SPoly& a, const SPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return SPoly(Rational(0), b.root_order());
  if (a.root_order() != b.root_order() && !a.is_constant() && !b.is_constant()) {
    const int l = std::lcm(a.root_order(), b.root_order());
    auto q = exact_divide(a.with_root(l), b.with_root(l));
    return q;
  }
  const int root = a.is_constant() ? b.root_order() : a.root_order();
  long sa = 0, sb = 0;
  const SPoly A = strip_monomial(a, &sa);
  const SPoly B = strip_monomial(b, &sb);
  if (A.high() < B.high()) return std::nullopt;
  std::vector<Rational> rem(A.coeffs());
  const auto& bc = B.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] / bc[db];
    if (sgn(q) == 0) continue;
    quot[k] = q;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * bc[i];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(rem[i]) != 0) return std::nullopt;
  return SPoly::from_coeffs(sa - sb, std::move(quot), root);
}

SPoly cyclotomic(long d, int root) {
  static std::mutex mu;
  static std::map<long, std::vector<Rational>> cache;
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return SPoly::from_coeffs(0, it->second, root);
  }
  // Φ_d = (s^d - 1) / prod_{k | d, k < d} Φ_k
  SPoly p = SPoly::monomial(Rational(1), d, 1) - SPoly(Rational(1), 1);
  for (long k = 1; k < d; ++k) {
    if (d % k) continue;
    p = *exact_divide(p, cyclotomic(k, 1));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, p.coeffs());
  return SPoly::from_coeffs(0, p.coeffs(), root);
}

std::string render(const SPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long e = p.low(); e <= p.high(); ++e) {
    Rational c = p.coeff(e);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    Rational ex(e, p.root_order());
    ex.canonicalize();
    std::string term;
    if (sgn(ex) == 0) {
      term = to_string(c);
    } else {
      if (c != 1) term = to_string(c) + "*";
      if (ex == 1) term += "y";
      else if (is_integer(ex) && sgn(ex) > 0) term += "y^" + to_string(ex);
      else term += "y^(" + to_string(ex) + ")";
    }
    if (first) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace ellgen
