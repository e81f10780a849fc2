#include "ellgen/theta.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ellgen {

namespace {

long integral_exponent(const Rational& e) {
  if (!is_integer(e)) throw std::logic_error("root order too small for exponent " + to_string(e));
  if (!e.get_num().fits_slong_p()) throw std::overflow_error("exponent out of range");
  return e.get_num().get_si();
}

}  // namespace

SPoly UniRing::mono(const Arg& x, const Rational& j, const Rational& c) const {
  return SPoly::monomial(c, integral_exponent(x.y * j * root_s), root_s);
}

Laurent<SPoly> BiRing::mono(const Arg& x, const Rational& j, const Rational& c) const {
  return Laurent<SPoly>::monomial(SPoly::monomial(c, integral_exponent(x.y * j * root_s), root_s),
                                  integral_exponent(x.w * j * root_r), root_r);
}

const QSeries<SPoly>& unit_series(int order) {
  static std::mutex mu;
  static std::map<int, QSeries<SPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  const SPoly one(Rational(1));
  const SPoly v = SPoly::monomial(Rational(1), 1);
  const SPoly vinv = SPoly::monomial(Rational(1), -1);
  auto u = QSeries<SPoly>::constant(one, order);
  for (int n = 1; n <= order; ++n) {
    auto f = QSeries<SPoly>::constant(one, order);
    f[n] = -v;
    auto g = QSeries<SPoly>::constant(one, order);
    g[n] = -vinv;
    // 1/(1-qⁿ)² = Σ (k+1) q^(nk)
    QSeries<SPoly> h(order);
    for (int k = 0; k * n <= order; ++k) h[k * n] = SPoly(Rational(k + 1));
    u = u * f * g * h;
  }
  return cache.emplace(order, std::move(u)).first->second;
}

int root_order_for(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = lcm(l, v.get_den());
  if (!l.fits_sint_p() || l.get_si() > (1 << 20)) throw std::overflow_error("root order too large");
  return 2 * static_cast<int>(l.get_si());
}

QSeries<SPoly> sigma_pure(const Rational& a, int order, int root) {
  UniRing ring{root > 0 ? root : root_order_for({a})};
  auto lead = lead_pure(ring, Arg(a));
  auto s = unit_pure(ring, Arg(a), order);
  return s * lead;
}

Graded<QSeries<SPoly>> sigma_shifted(const SurfaceModel& model, const CohomClass& d, const Rational& a, int order,
                                     int root) {
  if (sgn(a) == 0) throw ZeroArgument("σ(D) has a nilpotent leading term");
  UniRing ring{root > 0 ? root : root_order_for({a})};
  using S = QSeries<SPoly>;
  const auto lead = lead_shifted(ring, Arg(a));
  const auto unit = unit_shifted(ring, Arg(a), order);
  const DPoly<S> x = dmul(DPoly<S>{S::constant(lead[0], order), S::constant(lead[1], order),
                                   S::constant(lead[2], order)},
                          unit);
  const auto form = model.pairing_form();
  const Rational dd = pair(d.deg1, d.deg1, form, Rational(0));
  Graded<S> g(d.basis_size(), S(order));
  g.deg0 = x[0];
  for (std::size_t i = 0; i < d.deg1.size(); ++i)
    if (sgn(d.deg1[i]) != 0) g.deg1[i] = x[1] * SPoly(d.deg1[i], ring.root_s);
  g.deg2 = x[2] * SPoly(dd, ring.root_s);
  return g;
}

std::array<QSeries<SPoly>, 3> chern_genus_coeffs(int order) {
  auto phi = chern_factor(UniRing{2}, order);
  return {phi[0], phi[1], phi[2]};
}

PhiParts phi_parts(const Rational& a, int order, int root) {
  UniRing ring{root};
  PhiParts p;
  p.lead = lead_pure(ring, Arg(a + 2)) * lead_pure(ring, Arg(a));
  auto inv = qs_invert(unit_pure(ring, Arg(a + 1), order));
  p.unit = unit_pure(ring, Arg(a + 2), order) * unit_pure(ring, Arg(a), order) * inv * inv;
  p.half_exponent = integral_exponent((a + 1) * root / 2);
  return p;
}

QSeries<SFunc> phi_correction(const Rational& a, int order, int root) {
  if (a == -1) throw LogCanonicalPole("φ(-1) has σ(0) in the denominator");
  if (root <= 0) root = root_order_for({a});
  QSeries<SFunc> out(order);
  for (int k = 0; k <= order; ++k) out[k] = SFunc(Rational(0), root);
  if (sgn(a) == 0 || a == -2) return out;
  const auto p = phi_parts(a, order, root);
  for (int k = 0; k <= order; ++k) {
    CycloFraction f(p.lead * p.unit[k]);
    f.divide_by_half_binomial(p.half_exponent, 2);
    out[k] = f.to_sfunc();
  }
  return out;
}

}  // namespace ellgen
