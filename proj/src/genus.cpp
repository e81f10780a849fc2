#include "ellgen/genus.hpp"

#include <sstream>

#include "ellgen/rfunc.hpp"

namespace ellgen {

std::vector<FactorSpec> naive_factors(const SurfaceModel& model, const Coefficients& coeffs) {
  std::vector<FactorSpec> out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const Rational a = coefficient_of(coeffs, model.curves[i].label);
    if (sgn(a) == 0) continue;
    if (a == -1) {
      out.push_back({i, Arg(2), Arg(1), Arg(1), Arg(2)});
    } else {
      out.push_back({i, Arg(-(a + 1)), Arg(1), Arg(-1), Arg(a + 1)});
    }
  }
  return out;
}

int root_order(const Coefficients& coeffs) {
  std::vector<Rational> values;
  for (const auto& [label, a] : coeffs) values.push_back(a);
  return root_order_for(values);
}

std::vector<CycloFraction> naive_fractions(const SurfaceModel& model, const Coefficients& coeffs, int order,
                                           int root) {
  const UniRing ring{root};
  const auto e = expand(ring, model, naive_factors(model, coeffs), order);
  std::vector<CycloFraction> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    CycloFraction f(e.numerator[k].with_root(root));
    for (const auto& [arg, power] : e.denominator) {
      const Rational ex = arg.y * root / 2;
      f.divide_by_half_binomial(ex.get_num().get_si(), power);
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

QSeries<SFunc> to_series(const std::vector<CycloFraction>& f) {
  QSeries<SFunc> s(static_cast<int>(f.size()) - 1);
  for (std::size_t k = 0; k < f.size(); ++k) s[static_cast<int>(k)] = f[k].to_sfunc();
  return s;
}

void add_corrections(std::vector<CycloFraction>& acc, const std::map<Rational, Integer>& weights, int order,
                     int root) {
  for (const auto& [a, w] : weights) {
    if (w == 0 || sgn(a) == 0 || a == -2) continue;
    if (a == -1) throw LogCanonicalPole("correction term at a = -1");
    const auto p = phi_parts(a, order, root);
    const SPoly lead = p.lead * Rational(w);
    for (int k = 0; k <= order; ++k) {
      CycloFraction f(lead * p.unit[k]);
      f.divide_by_half_binomial(p.half_exponent, 2);
      acc[static_cast<std::size_t>(k)] += f;
    }
  }
}

}  // namespace

QSeries<SFunc> ell_naive(const SurfaceModel& model, const Coefficients& coeffs, int order) {
  return to_series(naive_fractions(model, coeffs, order, root_order(coeffs)));
}

std::map<Rational, Integer> correction_weights(const ResolutionGraph& g, const Interpretation& how) {
  const auto sets = combinatorial_sets(g, how);
  std::map<Rational, Integer> w;
  for (const auto& [a, vs] : sets.S) w[a] += static_cast<long>(vs.size());
  if (how.correction == Interpretation::Correction::PerBridge) {
    for (const auto& [a, vs] : sets.Bp)
      for (auto v : vs) w[a] -= g.vertices[v].m - 1;
  } else {
    std::set<Rational> keys;
    for (const auto& [a, vs] : sets.S) keys.insert(a);
    for (const auto& [a, vs] : sets.Bp)
      if (!vs.empty()) keys.insert(a);
    for (const auto& a : keys) {
      w[a] -= 1;
      auto it = sets.Bp.find(a);
      if (it != sets.Bp.end())
        for (auto v : it->second) w[a] -= g.vertices[v].m;
    }
  }
  if (how.bridge_count == Interpretation::BridgeCount::PerLabel) {
    for (const auto& [a, vs] : sets.B)
      for (auto v : vs) w[a] += g.vertices[v].m;
  } else {
    std::set<std::size_t> seen;
    for (const auto& [a, vs] : sets.B)
      for (auto v : vs)
        if (seen.insert(v).second) w[a] += g.vertices[v].m;
  }
  if (sets.d != 0) w[Rational(1)] += sets.d;
  for (auto it = w.begin(); it != w.end();) it = it->second == 0 ? w.erase(it) : std::next(it);
  return w;
}

QSeries<SFunc> correction_sum(const ResolutionGraph& g, int order, const Interpretation& how, int root) {
  if (root <= 0) {
    std::vector<Rational> values;
    for (const auto& v : g.vertices) values.push_back(v.a);
    root = root_order_for(values);
  }
  std::vector<CycloFraction> acc(static_cast<std::size_t>(order) + 1, CycloFraction(root));
  add_corrections(acc, correction_weights(g, how), order, root);
  return to_series(acc);
}

GenusResult ell(const SurfaceModel& model, const Coefficients& coeffs, const GenusOptions& options) {
  GenusResult r;
  r.coeffs = coeffs;
  r.options = options;
  r.root_order = root_order(coeffs);
  auto acc = naive_fractions(model, coeffs, options.q_order, r.root_order);
  add_corrections(acc, correction_weights(graph_from(model, coeffs), options.interpretation), options.q_order,
                  r.root_order);
  r.series = to_series(acc);
  return r;
}

GenusResult ell_singular(const SurfaceModel& model, const GenusOptions& options, const Coefficients& boundary) {
  Coefficients coeffs = solve_discrepancies(model, boundary);
  for (const auto& c : model.curves)
    if (!c.exceptional) coeffs[c.label] = coefficient_of(boundary, c.label);
  return ell(model, coeffs, options);
}

SFunc chi_y(const GenusResult& res) {
  const SFunc y(SPoly::monomial(Rational(1), res.root_order, res.root_order));
  return res.series.coefficient(0) * y;
}

bool regular_at_zero(const QSeries<SFunc>& s) {
  try {
    for (int k = 0; k <= s.order(); ++k) sfunc_eval_at_s1(s[k]);
  } catch (const PoleAtOne&) {
    return false;
  }
  return true;
}

std::string GenusResult::to_text() const {
  std::ostringstream out;
  out << "# coefficients:";
  for (const auto& [label, a] : coeffs) out << " " << label << "=" << to_string(a);
  out << "\n# q-order: " << options.q_order << "\n# " << options.interpretation.to_string() << "\n";
  out << render(series);
  return out.str();
}

}  // namespace ellgen
