#include <doctest.h>

#include "ellgen/corpus.hpp"
#include "ellgen/verify.hpp"
#include "ellgen/veys.hpp"
#include "support.hpp"

using namespace test;

namespace {

GenusOptions order(int q) {
  GenusOptions o;
  o.q_order = q;
  return o;
}

}  // namespace

TEST_CASE("smooth surfaces reproduce the Hirzebruch genus") {
  for (auto [c1sq, c2] : {std::pair{8L, 4L}, {9L, 3L}, {0L, 24L}, {5L, 7L}}) {
    const auto res = ell(Model(c1sq, c2).m, {}, order(2));
    CHECK(chi_y(res) == SFunc(hirzebruch_chi_minus_y(c1sq, c2)));
    CHECK(regular_at_zero(res.series));
  }
}

TEST_CASE("star: no correction and the Veys value") {
  const auto star = star_example();
  const auto g = graph_from(star.model, star.coeffs);
  CHECK(correction_sum(g, 3).is_zero());
  const auto res = ell(star.model, star.coeffs, order(3));
  CHECK(res.series == ell_naive(star.model, star.coeffs, 3));
  CHECK(cross_equal(chi_y(res), veys_chi_y(star.model, star.coeffs)));
  CHECK(regular_at_zero(res.series));
}

TEST_CASE("two adjacent -1 curves contribute d·φ(1)") {
  for (long d : {1L, 2L}) {
    const auto b = Model(0, 0)
                       .curve("U", 0, -2, false, Rational(-1))
                       .curve("V", 0, -3, false, Rational(-1))
                       .edge("U", "V", d);
    const auto g = graph_from(b.m, b.c);
    CHECK(combinatorial_sets(g).d == d);
    auto expected = phi_correction(Rational(1), 3, 2);
    expected = expected.map([d](const SFunc& f) { return f * SFunc(Rational(d)); });
    CHECK(correction_sum(g, 3) == expected);
  }
}

TEST_CASE("curves with coefficient zero do not change the genus") {
  const auto base = Model(4, 8)
                        .curve("A", 0, -3, false, Rational(1, 2))
                        .curve("B", 1, -1, false, Rational(-1))
                        .edge("A", "B");
  auto extended = base;
  extended.curve("Z", 0, 2, false, Rational(0)).edge("Z", "A").edge("Z", "B", 2);
  CHECK(ell(base.m, base.c, order(3)).series == ell(extended.m, extended.c, order(3)).series);
}

TEST_CASE("no -1 curves means no correction") {
  for (const auto& cfg : random_corpus(17, 40)) {
    const auto g = graph_from(cfg.model, cfg.coeffs);
    bool any = false;
    for (std::size_t v = 0; v < g.size(); ++v) any = any || g.is_minus_one(v);
    if (any) continue;
    CHECK(correction_weights(g).empty());
    CHECK(ell(cfg.model, cfg.coeffs, order(2)).series == ell_naive(cfg.model, cfg.coeffs, 2));
  }
}

TEST_CASE("blow-up invariance at nodes of two -1 curves and on -2 curves") {
  const auto b = Model(3, 9)
                     .curve("U", 0, -2, false, Rational(-1))
                     .curve("V", 1, -3, false, Rational(-1))
                     .curve("W", 0, -1, false, Rational(-2))
                     .edge("U", "V")
                     .edge("V", "W");
  const auto r1 = verify_blowup_invariance(b.m, b.c, PointSpec::node("U", "V"), order(3));
  CHECK(r1.case_number == 1);
  CHECK(r1.equal);
  const auto r4 = verify_blowup_invariance(b.m, b.c, PointSpec::on_curve("W"), order(3));
  CHECK(r4.case_number == 4);
  CHECK(r4.equal);
  const auto r5 = verify_blowup_invariance(b.m, b.c, PointSpec::generic(), order(3));
  CHECK(r5.case_number == 5);
  CHECK(r5.equal);
}

TEST_CASE("holomorphy: solved coefficients decay, wrong ones do not") {
  const auto star = star_example();
  const auto res = ell(star.model, star.coeffs, order(5));
  const auto h = verify_holomorphy(star.model, star.coeffs, res);
  CHECK(h.regular_at_one);
  CHECK(h.decays);

  auto wrong = star.coeffs;
  wrong["E4"] = Rational(-3, 2);
  const auto bad = ell(star.model, wrong, order(5));
  const auto hb = verify_holomorphy(star.model, wrong, bad);
  CHECK_FALSE(hb.decays);
}

TEST_CASE("exact series against direct theta evaluation") {
  const Complex z{0.13, 0.04}, tau{0.05, 0.7};
  for (const auto& cfg : random_corpus(19, 8)) {
    const auto res = ell(cfg.model, cfg.coeffs, order(6));
    const Complex exact = evaluate(res.series, z, tau);
    const Complex direct = ell_numeric(cfg.model, cfg.coeffs, z, tau);
    CHECK(std::abs(exact - direct) < 1e-6 * (1 + std::abs(direct)));
  }
}

TEST_CASE("text output") {
  const auto res = ell(Model(8, 4).m, {}, order(1));
  const auto text = res.to_text();
  CHECK(text.rfind("# coefficients:\n# q-order: 1\n# correction=per-bridge", 0) == 0);
  CHECK(text.find("q^0: ") != std::string::npos);
  CHECK(text.find("q^1: ") != std::string::npos);
}
