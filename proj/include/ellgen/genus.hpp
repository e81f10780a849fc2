#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellgen/graph.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/surface.hpp"
#include "ellgen/theta.hpp"

namespace ellgen {

/// One theta quotient σ(C + αz)σ(βz)/(σ(C + γz)σ(δz)) attached to a curve.
struct FactorSpec {
  std::size_t curve = 0;
  Arg alpha, beta, gamma, delta;
};

/// Factors of the naive genus: -1 curves get (2, 1, 1, 2), every other curve
/// with a ≠ 0 gets (-(a+1), 1, -1, a+1). Curves with a = 0 contribute 1.
std::vector<FactorSpec> naive_factors(const SurfaceModel& model, const Coefficients& coeffs);

/// Numerator series over a product of leading binomials, as produced by the
/// split σ = (lead)·(unit series).
template <class Ring>
struct Expansion {
  QSeries<typename Ring::K> numerator;
  std::vector<std::pair<Arg, int>> denominator;  ///< lead factor at Arg, to a power
};

template <class Ring>
Expansion<Ring> expand(const Ring& ring, const SurfaceModel& model, const std::vector<FactorSpec>& factors,
                       int order) {
  using K = typename Ring::K;
  using S = QSeries<K>;
  const std::size_t n = model.size();
  const std::size_t basis = n + 1;
  const IntMatrix form = model.pairing_form();
  const K kz = ring.zero();
  S sz(order);
  for (int k = 0; k <= order; ++k) sz[k] = kz;

  const auto phi = chern_factor(ring, order);
  Graded<S> unit(basis, sz);
  unit.deg0 = phi[0] * phi[0];
  unit.deg1[n] = -(phi[0] * phi[1]);  // c1 = -K
  S p11 = phi[1] * phi[1];
  p11 *= model.c2;
  S p02 = phi[0] * phi[2];
  p02 *= model.c1sq - 2 * model.c2;
  unit.deg2 = p11 + p02;

  Graded<K> lead(basis, kz);
  lead.deg0 = K(SPoly(Rational(1), ring.root_s));

  Expansion<Ring> out;
  for (const auto& f : factors) {
    const long self = model.dot(f.curve, f.curve);
    const auto la = lead_shifted(ring, f.alpha);
    const auto lg = lead_shifted(ring, f.gamma);
    // 1/(g0 + g1 D + g2 D²) = (g0² - g0 g1 D + (g1² - g0 g2) D²)/g0³
    const DPoly<K> adj{lg[0] * lg[0], -(lg[0] * lg[1]), lg[1] * lg[1] - lg[0] * lg[2]};
    DPoly<K> ln = dmul(la, adj);
    const K lb = lead_pure(ring, f.beta);
    for (auto& x : ln) x = x * lb;
    lead = multiply(lead, along(ln, f.curve, basis, self, kz), form, kz);

    auto un = dmul(unit_shifted(ring, f.alpha, order), dinvert(unit_shifted(ring, f.gamma, order)));
    const S scalar = unit_pure(ring, f.beta, order) * qs_invert(unit_pure(ring, f.delta, order));
    for (auto& x : un) x = x * scalar;
    unit = multiply(unit, along(un, f.curve, basis, self, sz), form, sz);

    out.denominator.emplace_back(f.gamma, 3);
    out.denominator.emplace_back(f.delta, 1);
  }

  // ∫ lead·unit: only the degree-2 part is needed.
  auto lift = [&](const K& k) { return S::constant(k, order); };
  std::vector<S> lead1;
  lead1.reserve(basis);
  for (const auto& x : lead.deg1) lead1.push_back(lift(x));
  out.numerator = lift(lead.deg0) * unit.deg2 + lift(lead.deg2) * unit.deg0 + pair(lead1, unit.deg1, form, sz);
  return out;
}

/// Naive genus as cyclotomic fractions, one per power of q.
std::vector<CycloFraction> naive_fractions(const SurfaceModel& model, const Coefficients& coeffs, int order,
                                           int root);

QSeries<SFunc> ell_naive(const SurfaceModel& model, const Coefficients& coeffs, int order);

/// Integer weight of φ(a) in the correction term, for every a that occurs.
std::map<Rational, Integer> correction_weights(const ResolutionGraph& g, const Interpretation& how = {});

QSeries<SFunc> correction_sum(const ResolutionGraph& g, int order, const Interpretation& how = {}, int root = 0);

struct GenusOptions {
  int q_order = 5;
  Interpretation interpretation;
};

struct GenusResult {
  QSeries<SFunc> series;
  int root_order = 2;
  Coefficients coeffs;
  GenusOptions options;

  /// Canonical text: a header echoing the configuration, then "q^k: ..." lines.
  std::string to_text() const;
};

/// Root order 2N that makes every exponent of the computation integral.
int root_order(const Coefficients& coeffs);

GenusResult ell(const SurfaceModel& model, const Coefficients& coeffs, const GenusOptions& options = {});

/// Solves the discrepancies of the exceptional curves and evaluates ell; other
/// curves take their coefficient from `boundary` (default 0).
GenusResult ell_singular(const SurfaceModel& model, const GenusOptions& options = {},
                         const Coefficients& boundary = {});

/// y · (q⁰ coefficient), as a rational function of y.
SFunc chi_y(const GenusResult& res);

/// True when no q-coefficient has a pole at y = 1.
bool regular_at_zero(const QSeries<SFunc>& s);

}  // namespace ellgen
