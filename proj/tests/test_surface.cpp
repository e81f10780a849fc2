#include <doctest.h>

#include "ellgen/corpus.hpp"
#include "ellgen/graph.hpp"
#include "support.hpp"

using namespace test;

TEST_CASE("discrepancies of single exceptional curves") {
  CHECK(solve_discrepancies(Model(8, 4).curve("E", 0, -1, true).m).at("E") == 1);
  for (long m : {1, 2, 3, 7}) CHECK(solve_discrepancies(Model(0, 0).curve("E", 1, -m, true).m).at("E") == -1);
  CHECK(solve_discrepancies(Model(0, 0).curve("E", 0, -3, true).m).at("E") == Rational(-1, 3));
}

TEST_CASE("star discrepancies") {
  const auto star = star_example();
  validate(star.model);
  CHECK(star.coeffs.at("E1") == -1);
  CHECK(star.coeffs.at("E2") == -1);
  CHECK(star.coeffs.at("E3") == -1);
  CHECK(star.coeffs.at("E4") == -2);
  // Substituting back into Σ_j a_j C_j·C_i = K·C_i.
  for (std::size_t i = 0; i < star.model.size(); ++i) {
    Rational lhs(0);
    for (std::size_t j = 0; j < star.model.size(); ++j)
      lhs += star.coeffs.at(star.model.curves[j].label) * star.model.dot(i, j);
    CHECK(lhs == star.model.k_dot(i));
  }
}

TEST_CASE("negative definiteness") {
  auto star = star_example().model;
  CHECK(negative_definite(star, star.exceptional_indices()));
  for (auto& c : star.curves)
    if (c.self_int == -4) c.self_int = -2;
  CHECK_FALSE(negative_definite(star, star.exceptional_indices()));
  CHECK_THROWS_AS(validate(star), NegativeDefinitenessFailure);
  // A degenerate lattice is rejected before solving.
  const auto flat = Model(0, 0).curve("A", 0, -2, true).curve("B", 0, -2, true).edge("A", "B", 2).m;
  CHECK_THROWS_AS(validate(flat), NegativeDefinitenessFailure);
  CHECK_THROWS_AS(solve_discrepancies(flat), SingularIntersectionMatrix);
}

TEST_CASE("model validation") {
  auto m = Model(0, 0).curve("A", 0, -2, true).curve("B", 0, -2, true).edge("A", "B").m;
  validate(m);
  m.pair_int(0, 1) = 2;
  CHECK_THROWS_AS(validate(m), InvalidModel);  // asymmetric
  m.pair_int(0, 1) = m.pair_int(1, 0) = -1;
  CHECK_THROWS_AS(validate(m), InvalidModel);
  m.pair_int(0, 1) = m.pair_int(1, 0) = 1;
  m.curves[1].label = "A";
  CHECK_THROWS_AS(validate(m), InvalidModel);
}

TEST_CASE("blow-up arithmetic") {
  const auto g = blowup(Model(9, 3).m, {}, PointSpec::generic());
  CHECK(g.model.c1sq == 8);
  CHECK(g.model.c2 == 4);
  CHECK(g.coeffs.at(g.new_label) == 1);

  const auto chain = Model(0, 12)
                         .curve("A", 0, -3, false, Rational(-1))
                         .curve("B", 0, -2, false, Rational(-1))
                         .curve("C", 0, -2, false, Rational(-2))
                         .edge("A", "B")
                         .edge("B", "C");
  const auto n = blowup(chain.m, chain.c, PointSpec::node("A", "B"));
  CHECK(n.coeffs.at(n.new_label) == -1);
  CHECK(n.model.curves[0].self_int == -4);
  CHECK(n.model.pair_int(0, 1) == 0);
  CHECK(n.model.pair_int(0, 3) == 1);
  CHECK(n.model.curves[3].exceptional);
  const auto c = blowup(chain.m, chain.c, PointSpec::on_curve("C"));
  CHECK(c.coeffs.at(c.new_label) == -1);
  CHECK_THROWS_AS(blowup(chain.m, chain.c, PointSpec::node("A", "C")), InvalidPoint);
  CHECK_THROWS_AS(blowup(chain.m, chain.c, PointSpec::on_curve("Z")), InvalidPoint);
  CHECK_THROWS_AS(PointSpec::parse("edge:A"), InvalidPoint);
  CHECK(PointSpec::parse("node:A,B").to_string() == "node:A,B");
}

TEST_CASE("cohomology pairing") {
  const auto m = Model(5, 7).curve("A", 1, -3, false).curve("B", 0, -2, false).edge("A", "B", 2).m;
  const auto k = canonical_class(m);
  CHECK(cohom_integrate(m, cohom_multiply(m, k, k)) == 5);
  CHECK(cohom_integrate(m, cohom_multiply(m, curve_class(m, 0), curve_class(m, 1))) == 2);
  CHECK(cohom_integrate(m, cohom_multiply(m, curve_class(m, 0), curve_class(m, 0))) == -3);
  CHECK(cohom_integrate(m, cohom_multiply(m, k, curve_class(m, 0))) == 2 * 1 - 2 + 3);
  CHECK(cohom_integrate(m, cohom_multiply(m, unit_class(m), k)) == 0);
}

TEST_CASE("re-solving after a blow-up reproduces the blow-up coefficients") {
  for (const auto& cfg : random_corpus(3, 30)) {
    if (cfg.name.rfind("solved", 0) != 0) continue;
    for (const auto& p : applicable_points(cfg.model)) {
      const auto b = blowup(cfg.model, cfg.coeffs, p);
      Coefficients fixed;
      for (const auto& c : b.model.curves)
        if (!c.exceptional) fixed[c.label] = coefficient_of(b.coeffs, c.label);
      const auto solved = solve_discrepancies(b.model, fixed);
      for (const auto& [label, a] : solved) CHECK(a == coefficient_of(b.coeffs, label));
    }
  }
}

TEST_CASE("solved coefficients satisfy a1 + a2 + 2 = m(a + 1) at two-neighbor rational curves") {
  int seen = 0;
  for (const auto& cfg : random_corpus(5, 60)) {
    if (cfg.name.rfind("solved", 0) != 0) continue;
    const auto g = graph_from(cfg.model, cfg.coeffs);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const auto nb = g.neighbors(v);
      if (!cfg.model.curves[v].exceptional || g.vertices[v].g != 0 || nb.size() != 2) continue;
      if (g.multiplicity(v, nb[0]) != 1 || g.multiplicity(v, nb[1]) != 1) continue;
      ++seen;
      CHECK(g.vertices[nb[0]].a + g.vertices[nb[1]].a + 2 == g.vertices[v].m * (g.vertices[v].a + 1));
    }
  }
  CHECK(seen > 0);
}
