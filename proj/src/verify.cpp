#include "ellgen/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ellgen/graph.hpp"

namespace ellgen {

namespace {

std::string sci(double x) {
  std::ostringstream out;
  out.precision(2);
  out << std::scientific << x;
  return out.str();
}

double relative_error(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

/// First q-power at which two series differ, or -1.
int first_difference(const QSeries<SFunc>& a, const QSeries<SFunc>& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (a[k] != b[k]) return k;
  return a.order() == b.order() ? -1 : n + 1;
}

}  // namespace

std::string render(const Report& report) {
  std::ostringstream out;
  for (const auto& c : report) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  return out.str();
}

bool all_pass(const Report& report) {
  for (const auto& c : report)
    if (!c.pass) return false;
  return true;
}

InvarianceResult verify_blowup_invariance(const SurfaceModel& model, const Coefficients& coeffs, const PointSpec& p,
                                          const GenusOptions& options) {
  InvarianceResult r;
  r.case_number = classify_point(model, coeffs, p);
  r.before = ell(model, coeffs, options).series;
  r.blown_up = blowup(model, coeffs, p);
  r.after = ell(r.blown_up.model, r.blown_up.coeffs, options).series;
  r.first_difference = first_difference(r.before, r.after);
  r.equal = r.first_difference < 0;
  return r;
}

InvarianceSummary invariance_suite(const std::vector<Configuration>& corpus, const GenusOptions& options) {
  InvarianceSummary s;
  for (const auto& cfg : corpus) {
    const auto before = ell(cfg.model, cfg.coeffs, options).series;
    for (const auto& p : applicable_points(cfg.model)) {
      const int kase = classify_point(cfg.model, cfg.coeffs, p);
      const auto b = blowup(cfg.model, cfg.coeffs, p);
      const auto after = ell(b.model, b.coeffs, options).series;
      const int diff = first_difference(before, after);
      ++s.checked;
      ++s.per_case[static_cast<std::size_t>(kase)];
      Check c{"invariance/" + cfg.name + "/" + p.to_string(), diff < 0, "case=" + std::to_string(kase)};
      if (diff < 0) {
        ++s.equal;
      } else {
        ++s.failures_per_case[static_cast<std::size_t>(kase)];
        c.detail += " first-difference=q^" + std::to_string(diff);
        if (!s.counterexample) {
          s.counterexample = ConfigFile{cfg.model, cfg.coeffs};
          s.counterexample_point = p.to_string();
        }
      }
      s.report.push_back(std::move(c));
    }
  }
  return s;
}

ResidueResult verify_residue_case(int n, Complex z, Complex tau, const Rational& a) {
  auto th = [&](Complex t) { return theta_numeric(t, tau); };
  const Complex tp = theta_prime_zero(tau);
  const double ad = a.get_d();
  // Building blocks of the F(t) of each case.
  auto tangent = [&](Complex t, Complex w) { return th(t + w) * tp / (th(t) * th(w)); };
  auto ratio = [&](Complex t, Complex c, Complex d) { return th(t + c) * th(z) / (th(t + d) * th(c)); };

  std::function<Complex(Complex)> f;
  Complex expected;
  switch (n) {
    case 1:
      f = [&](Complex t) {
        return tangent(t, z) * tangent(t, 2.0 * z) * tangent(t, -2.0 * z) * th(t - 2.0 * z) * th(z) /
               (th(t - z) * th(2.0 * z));
      };
      expected = std::pow(tp / th(z), 2) * th(3.0 * z) * th(z) / std::pow(th(2.0 * z), 2);
      break;
    case 2:
      f = [&](Complex t) {
        const Complex b = (ad + 1) * z;
        return std::pow(tangent(t, z), 2) * tangent(t, -z) * th(-t + 2.0 * z) * th(z) / (th(-t + z) * th(2.0 * z)) *
               ratio(t, b, z) * th(t - b) * th(z) / (th(t - z) * th(b));
      };
      expected = th((ad + 2) * z) * th(ad * z) / std::pow(th((ad + 1) * z), 2) * std::pow(tp / th(z), 2);
      break;
    case 3: {
      const double a1 = ad, a2 = -2 - ad;
      f = [&, a1, a2](Complex t) {
        return std::pow(tangent(t, z), 2) * tangent(t, -z) * ratio(t, 2.0 * z, z) * ratio(t, (a1 + 1) * z, z) *
               ratio(t, (a2 + 1) * z, z);
      };
      expected = 1.0;
      for (double ai : {a1, a2}) expected *= th(ai * z) * tp / (th((1 + ai) * z) * th(z));
      break;
    }
    case 4:
      f = [&](Complex t) {
        return std::pow(tangent(t, z), 2) * tangent(t, -z) * ratio(t, 2.0 * z, z) * th(t - z) * th(z) /
               (th(t + z) * th(-z));
      };
      expected = 0;
      break;
    default:
      throw std::invalid_argument("residue case must be 1..4");
  }
  ResidueResult r;
  r.residue = numeric_residue(f, 0, 0.5 * std::abs(z), 512);
  r.expected = expected;
  r.error = n == 4 ? std::abs(r.residue) : relative_error(r.residue, expected);
  return r;
}

Report residue_suite(Complex z, Complex tau) {
  Report out;
  auto add = [&](const std::string& name, int n, const Rational& a, double tol) {
    const auto r = verify_residue_case(n, z, tau, a);
    out.push_back({name, r.error < tol, "error=" + sci(r.error) + " tol=" + sci(tol)});
  };
  add("residue/case1", 1, 1, 1e-7);
  for (const Rational& a : {Rational(1), Rational(-3), Rational(2), Rational(1, 2)})
    add("residue/case2/a=" + to_string(a), 2, a, 1e-7);
  for (const Rational& a : {Rational(-3), Rational(0), Rational(-1, 2)})
    add("residue/case3/a1=" + to_string(a), 3, a, 1e-7);
  add("residue/case4", 4, 1, 1e-8);
  return out;
}

HolomorphyResult verify_holomorphy(const SurfaceModel& model, const Coefficients& coeffs, const GenusResult& res,
                                   Complex tau) {
  HolomorphyResult h;
  h.regular_at_one = regular_at_zero(res.series);
  const double steps[3] = {1e-2, 1e-3, 1e-4};
  for (int i = 0; i < 3; ++i) {
    const Complex z = tau / 2.0 + steps[i];
    h.magnitudes[static_cast<std::size_t>(i)] =
        std::abs(theta_numeric(2.0 * z, tau) * ell_numeric(model, coeffs, z, tau, res.options.interpretation));
  }
  // A simple zero gives ratios 10·(1 + O(δ)); a pole gives ratios near 1.
  for (std::size_t i = 0; i < 2; ++i) h.ratios[i] = h.magnitudes[i] / h.magnitudes[i + 1];
  h.decays = std::log10(h.ratios[0]) >= 0.99 && std::log10(h.ratios[1]) >= 0.99;
  return h;
}

Report holomorphy_suite() {
  Report out;
  for (const auto& cfg : {star_example(), simple_elliptic_example()}) {
    const auto res = ell(cfg.model, cfg.coeffs);
    const auto h = verify_holomorphy(cfg.model, cfg.coeffs, res);
    out.push_back({"holomorphy/" + cfg.name + "/s=1", h.regular_at_one, ""});
    out.push_back({"holomorphy/" + cfg.name + "/lattice", h.decays,
                   "|theta(2z)Ell|=" + sci(h.magnitudes[0]) + "," + sci(h.magnitudes[1]) + "," + sci(h.magnitudes[2]) +
                       " per-decade=" + sci(h.ratios[0]) + "," + sci(h.ratios[1])});
  }
  for (auto [c1sq, c2] : {std::pair{8L, 4L}, {9L, 3L}, {0L, 24L}}) {
    SurfaceModel m;
    m.c1sq = c1sq;
    m.c2 = c2;
    m.pair_int = IntMatrix::Zero(0, 0);
    const auto res = ell(m, {});
    out.push_back({"holomorphy/smooth(" + std::to_string(c1sq) + "," + std::to_string(c2) + ")/s=1",
                   regular_at_zero(res.series), ""});
  }
  return out;
}

Report theta_suite(std::uint64_t seed) {
  Report out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im_t(-0.3, 0.3), im_tau(0.6, 1.5);
  const Complex I(0, 1);
  double worst_t1 = 0, worst_tt = 0, worst_m1 = 0, worst_m2 = 0;
  for (int k = 0; k < 5; ++k) {
    const Complex t(re(rng), im_t(rng)), tau(re(rng), im_tau(rng));
    const Complex th = theta_numeric(t, tau);
    worst_t1 = std::max(worst_t1, relative_error(theta_numeric(t + 1.0, tau), -th));
    worst_tt = std::max(worst_tt, relative_error(theta_numeric(t + tau, tau),
                                                 -std::exp(-M_PI * I * tau) * std::exp(-2.0 * M_PI * I * t) * th));
    worst_m1 = std::max(worst_m1, relative_error(theta_numeric(t, tau + 1.0), std::exp(M_PI * I / 4.0) * th));
    worst_m2 = std::max(worst_m2, relative_error(theta_numeric(t / tau, -1.0 / tau),
                                                 (1.0 / I) * std::sqrt(tau / I) * std::exp(M_PI * I * t * t / tau) * th));
  }
  out.push_back({"theta/translation-1", worst_t1 < 1e-8, "max-error=" + sci(worst_t1)});
  out.push_back({"theta/translation-tau", worst_tt < 1e-8, "max-error=" + sci(worst_tt)});
  out.push_back({"theta/modular-T", worst_m1 < 1e-8, "max-error=" + sci(worst_m1)});
  out.push_back({"theta/modular-S", worst_m2 < 1e-8, "max-error=" + sci(worst_m2)});

  // Exact and numeric backends at |q| = e^(-1.4π) ≈ 0.012.
  const Complex z(0.13, 0.04), tau(0.05, 0.7);
  double worst_sigma = 0;
  for (const Rational& a : {Rational(1), Rational(-3), Rational(1, 2), Rational(5, 3)}) {
    const auto s = sigma_pure(a, 5);
    worst_sigma = std::max(worst_sigma, relative_error(evaluate(s, z, tau), sigma_numeric(a.get_d() * z, tau)));
  }
  out.push_back({"theta/backend-sigma", worst_sigma < 1e-6, "max-error=" + sci(worst_sigma)});

  std::vector<Configuration> configs{star_example(), simple_elliptic_example()};
  for (const auto& c : random_corpus(seed, 12)) configs.push_back(c);
  double worst_ell = 0;
  for (const auto& cfg : configs) {
    const auto res = ell(cfg.model, cfg.coeffs);
    worst_ell = std::max(worst_ell, relative_error(evaluate(res.series, z, tau), ell_numeric(cfg.model, cfg.coeffs, z, tau)));
  }
  out.push_back({"theta/backend-ell", worst_ell < 1e-6,
                 "configurations=" + std::to_string(configs.size()) + " max-error=" + sci(worst_ell)});
  return out;
}

Perturbation balanced_perturbation(const SurfaceModel& model, const Coefficients& coeffs,
                                   const std::map<std::string, Rational>& base) {
  Perturbation p;
  for (const auto& c : model.curves)
    if (coefficient_of(coeffs, c.label) != -1) p.b[c.label] = coefficient_of(base, c.label);
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& c = model.curves[i];
    if (coefficient_of(coeffs, c.label) != -1) continue;
    Rational s(0);
    for (std::size_t j = 0; j < model.size(); ++j)
      if (j != i && coefficient_of(coeffs, model.curves[j].label) != -1)
        s += model.dot(i, j) * coefficient_of(p.b, model.curves[j].label);
    p.b[c.label] = s / -c.self_int;
  }
  return p;
}

Report perturbation_suite(std::uint64_t seed, int count) {
  Report out;
  const int order = 3;
  GenusOptions opt;
  opt.q_order = order;
  auto compare = [&](const std::string& name, const Configuration& cfg, const Perturbation& p) {
    try {
      const auto lim = perturbed_limit(cfg.model, cfg.coeffs, p, order);
      const auto want = ell(cfg.model, cfg.coeffs, opt).series;
      const int diff = first_difference(lim, want);
      out.push_back({name, diff < 0, diff < 0 ? "limit=ell" : "first-difference=q^" + std::to_string(diff)});
    } catch (const MathError& e) {
      out.push_back({name, false, e.what()});
    }
  };

  int k = 0;
  for (const auto& cfg : bridge_corpus(seed, count)) {
    std::map<std::string, Rational> base;
    for (const auto& c : cfg.model.curves) base[c.label] = Rational(k++ % 3 + 1);
    compare("perturbation/" + cfg.name, cfg, balanced_perturbation(cfg.model, cfg.coeffs, base));
  }

  const auto se = simple_elliptic_example();
  // f*H = H + E/m, so -εf*H shifts E by ε/m and H by ε.
  Perturbation ample;
  ample.b["E"] = 1;
  ample.b["H"] = -se.model.curves[0].self_int;
  compare("perturbation/simple-elliptic-ample", se, ample);
  return out;
}

Complex localization_p1(const Rational& a1, const Rational& a2, Complex t, Complex z, Complex tau) {
  if (a1 == -1 || a2 == -1) throw LogCanonicalPole("localization needs a1, a2 != -1");
  auto th = [&](Complex x) { return theta_numeric(x, tau); };
  auto term = [&](double a, Complex w) { return th(w - (a + 1) * z) * th(z) / (th(w) * th((a + 1) * z)); };
  return term(a1.get_d(), t) + term(a2.get_d(), -t);
}

QSeries<SFunc> localization_p1_exact(const Rational& a1, const Rational& a2, int order) {
  if (a1 == -1 || a2 == -1) throw LogCanonicalPole("localization needs a1, a2 != -1");
  const Rational specializations[2] = {Rational(1, 3), Rational(5, 2)};
  auto at = [&](const Rational& c) {
    const int root = root_order_for({a1, a2, c});
    auto sig = [&](const Rational& x) { return sigma_pure(x, order, root).map([](const SPoly& p) { return SFunc(p); }); };
    const auto s1 = sig(Rational(1));
    auto term = [&](const Rational& a, const Rational& w) {
      return sig(w - (a + 1)) * s1 * qs_invert(sig(w) * sig(a + 1));
    };
    return term(a1, c) + term(a2, -c);
  };
  const auto first = at(specializations[0]);
  const auto second = at(specializations[1]);
  if (const int k = first_difference(first, second); k >= 0)
    throw TDependence("two-point sum depends on t at q^" + std::to_string(k));
  return first;
}

Report localization_suite() {
  Report out;
  const Complex tau(0.1, 0.9);
  const Complex samples[5][2] = {{{0.11, 0.02}, {0.23, 0.05}}, {{0.31, -0.04}, {0.07, 0.03}}, {{-0.2, 0.1}, {0.17, -0.02}},
                                 {{0.4, 0.06}, {0.29, 0.08}}, {{0.05, -0.07}, {-0.13, 0.04}}};
  const std::pair<Rational, Rational> pairs[] = {{-2, 0}, {-3, 1}, {Rational(-1, 2), Rational(-3, 2)}, {2, -4},
                                                 {Rational(-4, 3), Rational(-2, 3)}};
  for (const auto& [a1, a2] : pairs) {
    const std::string name = "localization/(" + to_string(a1) + "," + to_string(a2) + ")";
    bool exact_zero = false;
    std::string detail;
    try {
      const auto s = localization_p1_exact(a1, a2, 5);
      exact_zero = s.is_zero();
      detail = exact_zero ? "exact=0" : "exact!=0";
    } catch (const MathError& e) {
      detail = e.what();
    }
    double worst = 0;
    for (const auto& tz : samples) worst = std::max(worst, std::abs(localization_p1(a1, a2, tz[0], tz[1], tau)));
    out.push_back({name, exact_zero && worst < 1e-9, detail + " numeric-max=" + sci(worst)});
  }
  const auto p1 = localization_p1_exact(0, 0, 0);
  const SFunc chi = p1[0] * SFunc(SPoly::monomial(Rational(1), 1, 2));
  const SFunc want(SPoly::from_coeffs(0, {Rational(1), Rational(1)}, 1));
  out.push_back({"localization/(0,0)/chi", cross_equal(chi, want), "y^(1/2)*q^0=" + chi.to_string()});
  return out;
}

}  // namespace ellgen
