#include "ellgen/perturb.hpp"

namespace ellgen {

std::vector<FactorSpec> perturbed_factors(const SurfaceModel& model, const Coefficients& coeffs,
                                          const Perturbation& p) {
  std::vector<FactorSpec> out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& label = model.curves[i].label;
    const Rational a = coefficient_of(coeffs, label);
    const Rational b = coefficient_of(p.b, label);
    if (sgn(a) == 0 && sgn(b) == 0) continue;
    if (a == -1 && sgn(b) == 0) throw LogCanonicalPole("curve " + label + " has coefficient -1 and no perturbation");
    out.push_back({i, Arg(-(a + 1), -b), Arg(1), Arg(-1), Arg(a + 1, b)});
  }
  return out;
}

namespace {

struct Setup {
  BiRing ring;
  Expansion<BiRing> expansion;
};

Setup expand_perturbed(const SurfaceModel& model, const Coefficients& coeffs, const Perturbation& p, int order) {
  std::vector<Rational> bs;
  for (const auto& [label, b] : p.b) bs.push_back(b);
  BiRing ring{root_order(coeffs), root_order_for(bs)};
  auto e = expand(ring, model, perturbed_factors(model, coeffs, p), order);
  return {ring, std::move(e)};
}

long exponent(const Rational& x) { return x.get_num().get_si(); }

}  // namespace

QSeries<RFunc> perturbed_ell(const SurfaceModel& model, const Coefficients& coeffs, const Perturbation& p,
                             int order) {
  const auto [ring, e] = expand_perturbed(model, coeffs, p, order);
  Laurent<SPoly> den(SPoly(Rational(1), ring.root_s), ring.root_r);
  for (const auto& [arg, power] : e.denominator)
    for (int k = 0; k < power; ++k) den = den * lead_pure(ring, arg);
  auto lift = [](const Laurent<SPoly>& x) { return x.map([](const SPoly& c) { return SFunc(c); }); };
  const RPoly d = lift(den);
  QSeries<RFunc> out(order);
  for (int k = 0; k <= order; ++k) out[k] = RFunc(lift(e.numerator[k]), d, false);
  return out;
}

QSeries<SFunc> perturbed_limit(const SurfaceModel& model, const Coefficients& coeffs, const Perturbation& p,
                               int order) {
  const auto [ring, e] = expand_perturbed(model, coeffs, p, order);
  // Denominator factors in w alone vanish at w = 1 to first order, with
  // r^c - r^(-c) = 2c·t + O(t²) for r = 1 + t; the others are units there.
  long pole = 0;
  Rational scale(1);
  std::vector<std::pair<long, int>> units;
  for (const auto& [arg, power] : e.denominator) {
    if (sgn(arg.y) == 0) {
      const Rational c = arg.w * ring.root_r / 2;
      pole += power;
      for (int k = 0; k < power; ++k) scale *= 2 * c;
    } else {
      units.emplace_back(exponent(arg.y * ring.root_s / 2), power);
    }
  }
  QSeries<SFunc> out(order);
  for (int k = 0; k <= order; ++k) {
    const auto& num = e.numerator[k];
    auto taylor = [&](long m) {
      SPoly acc(Rational(0), ring.root_s);
      for (long i = num.low(); i <= num.high() && !num.is_zero(); ++i) {
        const SPoly& c = num.coeffs()[static_cast<std::size_t>(i - num.low())];
        if (c.is_zero()) continue;
        const Rational b = binomial(i, m);
        if (sgn(b) != 0) acc += c * b;
      }
      return acc;
    };
    for (long m = 0; m < pole; ++m)
      if (!taylor(m).is_zero())
        throw PoleAtOne("q^" + std::to_string(k) + ": perturbation limit does not exist");
    CycloFraction f(taylor(pole).with_root(ring.root_s) * (Rational(1) / scale));
    for (const auto& [ex, power] : units) f.divide_by_half_binomial(ex, power);
    out[k] = f.to_sfunc();
  }
  return out;
}

}  // namespace ellgen
