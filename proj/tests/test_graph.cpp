#include <doctest.h>

#include <algorithm>

#include "ellgen/corpus.hpp"
#include "ellgen/graph.hpp"
#include "support.hpp"

using namespace test;

namespace {

ResolutionGraph graph(const Model& b) { return graph_from(b.m, b.c); }

bool subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("bridges") {
  // A -1 curve between a and -2-a.
  const auto two = Model(0, 0)
                       .curve("A", 0, -2, false, Rational(1, 2))
                       .curve("V", 0, -1, true, Rational(-1))
                       .curve("B", 0, -3, false, Rational(-5, 2))
                       .edge("A", "V")
                       .edge("V", "B");
  CHECK(is_bridge(graph(two), 1));
  CHECK(bridge_labels(graph(two), 1) == std::pair<Rational, Rational>(Rational(1, 2), Rational(-5, 2)));

  const auto one = Model(0, 0).curve("A", 0, -2, false, Rational(-2)).curve("V", 0, -1, true, Rational(-1)).edge("A", "V");
  CHECK(is_bridge(graph(one), 1));
  CHECK(bridge_labels(graph(one), 1).second == 0);

  auto off = two;
  off.c["B"] = Rational(-2);
  CHECK_FALSE(is_bridge(graph(off), 1));

  auto doubled = two;
  doubled.edge("A", "V", 2);
  CHECK_FALSE(is_bridge(graph(doubled), 1));

  auto elliptic = two;
  elliptic.m.curves[1].genus = 1;
  CHECK_FALSE(is_bridge(graph(elliptic), 1));

  const auto isolated = Model(0, 0).curve("V", 0, -1, true, Rational(-1));
  CHECK_FALSE(is_bridge(graph(isolated), 0));
}

TEST_CASE("paths to -1 vertices") {
  // A(1/2) - B(2) - V(-1, not a bridge) - W(-1)
  const auto chain = Model(0, 0)
                         .curve("A", 0, -2, false, Rational(1, 2))
                         .curve("B", 0, -2, false, Rational(2))
                         .curve("V", 0, -1, false, Rational(-1))
                         .curve("W", 0, -1, false, Rational(-1))
                         .edge("A", "B")
                         .edge("B", "V")
                         .edge("V", "W");
  const auto g = graph(chain);
  CHECK(connected_to_minus_one(g, 0));
  CHECK(connected_to_minus_one(g, 1));
  CHECK_FALSE(connected_to_minus_one(g, 2));

  // The intermediate vertex must lie on the far side of a_v from -1.
  auto blocked = chain;
  blocked.c["B"] = Rational(0);
  CHECK_FALSE(connected_to_minus_one(graph(blocked), 0));
  CHECK(connected_to_minus_one(graph(blocked), 1));

  auto elliptic = chain;
  elliptic.m.curves[1].genus = 1;
  CHECK_FALSE(connected_to_minus_one(graph(elliptic), 0));

  // Literal reading also constrains the source vertex.
  auto source = chain;
  source.m.curves[0].genus = 1;
  CHECK_FALSE(connected_to_minus_one(graph(source), 0, Interpretation::PathCondition::Literal));
  CHECK(connected_to_minus_one(graph(source), 0, Interpretation::PathCondition::Interior));

  // Below -1 the inequality flips.
  const auto below = Model(0, 0)
                         .curve("A", 0, -2, false, Rational(-3))
                         .curve("B", 0, -2, false, Rational(-4))
                         .curve("V", 0, -1, false, Rational(-1))
                         .edge("A", "B")
                         .edge("B", "V");
  CHECK(connected_to_minus_one(graph(below), 0));
  auto above = below;
  above.c["B"] = Rational(-2);
  CHECK_FALSE(connected_to_minus_one(graph(above), 0));
}

TEST_CASE("combinatorial sets of a small configuration") {
  // X(1) - V(-1) - Y(-3), X also meets the non-bridge -1 curve W, which meets U(-1).
  const auto b = Model(0, 0)
                     .curve("X", 0, -2, false, Rational(1))
                     .curve("V", 0, -1, true, Rational(-1))
                     .curve("Y", 0, -2, false, Rational(-3))
                     .curve("W", 0, -1, false, Rational(-1))
                     .curve("U", 0, -1, false, Rational(-1))
                     .edge("X", "V")
                     .edge("V", "Y")
                     .edge("X", "W")
                     .edge("W", "U", 2);
  const auto s = combinatorial_sets(graph(b));
  CHECK(s.d == 2);
  CHECK(s.S.at(Rational(1)) == std::set<std::size_t>{0});
  CHECK_FALSE(s.S.count(Rational(-3)));
  CHECK(s.R.at(Rational(1)) == std::set<std::size_t>{0});
  CHECK(s.B.at(Rational(1)) == std::set<std::size_t>{1});
  CHECK(s.B.at(Rational(-3)) == std::set<std::size_t>{1});
  CHECK(s.Bp.at(Rational(1)) == std::set<std::size_t>{1});
  CHECK_FALSE(s.Bp.count(Rational(-3)));
}

TEST_CASE("set inclusions over the random corpus") {
  const std::vector<Interpretation> readings = [] {
    std::vector<Interpretation> out(4);
    out[1].path_condition = Interpretation::PathCondition::Interior;
    out[2].r_connectivity = Interpretation::Connectivity::Adjacent;
    out[3].bp_connectivity = Interpretation::Connectivity::Path;
    return out;
  }();
  for (const auto& cfg : random_corpus(13, 60)) {
    const auto g = graph_from(cfg.model, cfg.coeffs);
    for (const auto& how : readings) {
      const auto s = combinatorial_sets(g, how);
      for (const auto& [a, r] : s.R) CHECK(subset(r, s.S.at(a)));
      for (const auto& [a, bp] : s.Bp) CHECK(subset(bp, s.B.at(a)));
      for (const auto& [a, bridges] : s.B) {
        CHECK(a != -1);
        REQUIRE(s.B.count(-2 - a));
        CHECK(s.B.at(-2 - a) == bridges);
        for (auto v : bridges) CHECK(is_bridge(g, v));
      }
      for (const auto& [a, vs] : s.S)
        for (auto v : vs) {
          CHECK(g.vertices[v].a == a);
          CHECK_FALSE(g.is_minus_one(v));
        }
    }
  }
}

TEST_CASE("blowing up a node between a and -2-a creates a bridge") {
  const auto b = Model(0, 0).curve("A", 0, -2, false, Rational(1, 3)).curve("B", 0, -2, false, Rational(-7, 3)).edge("A", "B");
  const auto up = blowup(b.m, b.c, PointSpec::node("A", "B"));
  const auto g = graph_from(up.model, up.coeffs);
  const auto e = up.model.require(up.new_label);
  CHECK(g.vertices[e].a == -1);
  CHECK(is_bridge(g, e));
  CHECK(g.multiplicity(0, 1) == 0);
  CHECK(combinatorial_sets(g).d == 0);
}

TEST_CASE("interpretation strings") {
  Interpretation how;
  CHECK(how.to_string() ==
        "correction=per-bridge path-condition=literal r-connectivity=path bp-connectivity=adjacent bridge-count=once");
  how.correction = Interpretation::Correction::Alt;
  how.bridge_count = Interpretation::BridgeCount::PerLabel;
  CHECK(to_string(how.correction) == "alt");
  CHECK(to_string(how.bridge_count) == "per-label");
}
