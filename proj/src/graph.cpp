#include "ellgen/graph.hpp"

#include <deque>

namespace ellgen {

std::vector<std::size_t> ResolutionGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < size(); ++u)
    if (u != v && multiplicity(v, u) > 0) out.push_back(u);
  return out;
}

ResolutionGraph graph_from(const SurfaceModel& model, const Coefficients& coeffs) {
  ResolutionGraph g;
  for (const auto& c : model.curves)
    g.vertices.push_back(Vertex{c.label, coefficient_of(coeffs, c.label), -c.self_int, c.genus});
  g.edges = model.pair_int;
  return g;
}

std::string to_string(Interpretation::Correction c) {
  return c == Interpretation::Correction::PerBridge ? "per-bridge" : "alt";
}
std::string to_string(Interpretation::PathCondition c) {
  return c == Interpretation::PathCondition::Literal ? "literal" : "interior";
}
std::string to_string(Interpretation::Connectivity c) {
  return c == Interpretation::Connectivity::Path ? "path" : "adjacent";
}
std::string to_string(Interpretation::BridgeCount c) {
  return c == Interpretation::BridgeCount::Once ? "once" : "per-label";
}

std::string Interpretation::to_string() const {
  return "correction=" + ellgen::to_string(correction) + " path-condition=" + ellgen::to_string(path_condition) +
         " r-connectivity=" + ellgen::to_string(r_connectivity) +
         " bp-connectivity=" + ellgen::to_string(bp_connectivity) +
         " bridge-count=" + ellgen::to_string(bridge_count);
}

bool is_bridge(const ResolutionGraph& g, std::size_t v) {
  if (!g.is_minus_one(v) || g.vertices[v].g != 0) return false;
  const auto nb = g.neighbors(v);
  for (auto u : nb)
    if (g.multiplicity(v, u) != 1) return false;
  if (nb.size() == 2) return g.vertices[nb[0]].a + g.vertices[nb[1]].a == -2;
  if (nb.size() == 1) return g.vertices[nb[0]].a == -2;
  return false;
}

namespace {

bool admissible(const ResolutionGraph& g, std::size_t k, const Rational& a) {
  if (g.vertices[k].g != 0) return false;
  return a > -1 ? g.vertices[k].a >= a : g.vertices[k].a <= a;
}

template <class Target>
bool path_to(const ResolutionGraph& g, std::size_t v, Interpretation::PathCondition cond, Target is_target) {
  const Rational& a = g.vertices[v].a;
  if (cond == Interpretation::PathCondition::Literal && !admissible(g, v, a)) return false;
  std::vector<bool> seen(g.size(), false);
  std::deque<std::size_t> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    const auto k = queue.front();
    queue.pop_front();
    for (auto u : g.neighbors(k)) {
      if (seen[u]) continue;
      seen[u] = true;
      if (is_target(u)) return true;
      if (admissible(g, u, a)) queue.push_back(u);
    }
  }
  return false;
}

}  // namespace

bool connected_to_minus_one(const ResolutionGraph& g, std::size_t v, Interpretation::PathCondition cond) {
  if (g.is_minus_one(v)) return false;
  return path_to(g, v, cond, [&](std::size_t u) { return g.is_minus_one(u) && !is_bridge(g, u); });
}

bool connected_to_bridge(const ResolutionGraph& g, std::size_t v, Interpretation::PathCondition cond,
                         Interpretation::Connectivity how) {
  if (g.is_minus_one(v)) return false;
  auto target = [&](std::size_t u) { return is_bridge(g, u); };
  if (how == Interpretation::Connectivity::Adjacent) {
    for (auto u : g.neighbors(v))
      if (target(u)) return true;
    return false;
  }
  return path_to(g, v, cond, target);
}

std::pair<Rational, Rational> bridge_labels(const ResolutionGraph& g, std::size_t v) {
  const auto nb = g.neighbors(v);
  if (nb.size() == 1) return {g.vertices[nb[0]].a, Rational(0)};
  return {g.vertices[nb[0]].a, g.vertices[nb[1]].a};
}

CombinatorialSets combinatorial_sets(const ResolutionGraph& g, const Interpretation& how) {
  CombinatorialSets out;
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.is_minus_one(v)) continue;
    if (!connected_to_minus_one(g, v, how.path_condition)) continue;
    const auto& a = g.vertices[v].a;
    out.S[a].insert(v);
    if (connected_to_bridge(g, v, how.path_condition, how.r_connectivity)) out.R[a].insert(v);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!is_bridge(g, v)) continue;
    const auto [a1, a2] = bridge_labels(g, v);
    if (a1 == -1) continue;  // both neighbors are -1 vertices; φ(-1) is undefined
    out.B[a1].insert(v);
    out.B[a2].insert(v);
  }
  for (const auto& [a, bridges] : out.B) {
    auto r = out.R.find(a);
    for (auto v : bridges) {
      bool attached = false;
      if (r != out.R.end()) {
        for (auto u : r->second) {
          if (how.bp_connectivity == Interpretation::Connectivity::Adjacent) {
            attached = g.multiplicity(u, v) > 0;
          } else {
            attached = path_to(g, u, how.path_condition, [v](std::size_t w) { return w == v; });
          }
          if (attached) break;
        }
      }
      if (attached) out.Bp[a].insert(v);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.is_minus_one(i) && g.is_minus_one(j)) out.d += g.multiplicity(i, j);
  return out;
}

}  // namespace ellgen
