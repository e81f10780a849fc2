#include "ellgen/veys.hpp"

#include "ellgen/genus.hpp"

namespace ellgen {

SPoly noether_e_polynomial(long c1sq, long c2) {
  const Rational chi0(c1sq + c2, 12), chi1(c1sq - 5 * c2, 6);
  Rational c0 = chi0, c1 = -chi1;
  c0.canonicalize();
  c1.canonicalize();
  return SPoly::from_coeffs(0, {c0, c1, c0});
}

namespace {

class Terms {
 public:
  explicit Terms(int root) : root_(root), sum_(root) {}

  SPoly u_power(const Rational& k) const {
    const Rational e = k * root_;
    return SPoly::monomial(Rational(1), e.get_num().get_si(), root_);
  }

  /// Multiplies f by (u - 1)/(u^(a+1) - 1).
  void weight(CycloFraction& f, const Rational& a) const {
    if (sgn(a) == 0) return;
    const Rational c = a + 1;
    f *= u_power(Rational(1, 2) - c / 2) * half_binomial(root_ / 2, root_);
    const Rational e = c * root_ / 2;
    f.divide_by_half_binomial(e.get_num().get_si());
  }

  void add(CycloFraction f) { sum_ += f; }
  SFunc total() const { return sum_.to_sfunc(); }
  int root() const { return root_; }

 private:
  int root_;
  CycloFraction sum_;
};

}  // namespace

SFunc veys_chi_y(const ResolutionGraph& g, const SPoly& ambient) {
  const std::size_t n = g.size();
  std::vector<bool> in_s(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (!g.is_minus_one(v)) continue;
    if (!is_bridge(g, v))
      throw VeysHypothesisViolated("-1 vertex " + g.vertices[v].label + " is not a bridge");
    for (auto u : g.neighbors(v))
      if (g.is_minus_one(u))
        throw VeysHypothesisViolated("bridge " + g.vertices[v].label + " meets another -1 vertex");
    in_s[v] = true;
  }

  std::vector<Rational> values;
  for (const auto& v : g.vertices) values.push_back(v.a);
  Terms t(root_order_for(values));
  const int root = t.root();
  auto u_poly = [&](const SPoly& p) { return p.rescaled(root); };  // polynomial in u -> in s
  const SPoly one(Rational(1), root);
  const SPoly u = t.u_power(Rational(1));

  // Open curve strata: (1-g)(1+u) - (number of points on other curves).
  std::vector<SPoly> open(n);
  SPoly points_total(Rational(0), root);
  for (std::size_t i = 0; i < n; ++i) {
    long punctures = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) punctures += g.multiplicity(i, j);
    open[i] = (one + u) * Rational(1 - g.vertices[i].g) - one * Rational(punctures);
  }
  SPoly complement = u_poly(ambient).with_root(root);
  for (std::size_t i = 0; i < n; ++i) {
    complement -= open[i];
    for (std::size_t j = i + 1; j < n; ++j) complement -= one * Rational(g.multiplicity(i, j));
  }
  t.add(CycloFraction(complement));

  for (std::size_t i = 0; i < n; ++i) {
    if (in_s[i]) continue;
    CycloFraction f(open[i]);
    t.weight(f, g.vertices[i].a);
    t.add(f);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (in_s[j] || g.multiplicity(i, j) == 0) continue;
      CycloFraction p(one * Rational(g.multiplicity(i, j)));
      t.weight(p, g.vertices[i].a);
      t.weight(p, g.vertices[j].a);
      t.add(p);
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (!in_s[v]) continue;
    const auto [a1, a2] = bridge_labels(g, v);
    // m (u-1)²/((u^(a1+1)-1)(u^(a2+1)-1))
    CycloFraction f(one * Rational(g.vertices[v].m));
    t.weight(f, a1);
    t.weight(f, a2);
    t.add(f);
  }
  return t.total();
}

SFunc veys_bridge_term(long m, const Rational& a1, const Rational& a2) {
  Terms t(root_order_for({a1, a2}));
  CycloFraction f(SPoly(Rational(m), t.root()));
  t.weight(f, a1);
  t.weight(f, a2);
  t.add(f);
  return t.total();
}

SFunc veys_chi_y(const SurfaceModel& model, const Coefficients& coeffs, const std::optional<SPoly>& ambient) {
  return veys_chi_y(graph_from(model, coeffs), ambient ? *ambient : noether_e_polynomial(model.c1sq, model.c2));
}

}  // namespace ellgen
