#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ellgen/rational.hpp"
#include "ellgen/surface.hpp"

namespace ellgen {

struct Vertex {
  std::string label;
  Rational a;
  long m = 0;
  int g = 0;
};

/// Dual graph of a curve configuration with labels (a_i, m_i, g_i).
struct ResolutionGraph {
  std::vector<Vertex> vertices;
  IntMatrix edges;  ///< edge multiplicities, zero diagonal

  std::size_t size() const { return vertices.size(); }
  long multiplicity(std::size_t i, std::size_t j) const {
    return edges(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  std::vector<std::size_t> neighbors(std::size_t v) const;
  bool is_minus_one(std::size_t v) const { return vertices[v].a == -1; }
};

ResolutionGraph graph_from(const SurfaceModel& model, const Coefficients& coeffs);

/// Readings of the parts of the correction term that admit more than one parse.
struct Interpretation {
  /// PerBridge: |S_a| - Σ_{B'_a}(m_v - 1).  Alt: |S_a| - Σ_{B'_a} m_v - 1.
  enum class Correction { PerBridge, Alt };
  /// Literal: the path conditions also apply to the source vertex.
  enum class PathCondition { Literal, Interior };
  enum class Connectivity { Path, Adjacent };
  /// PerLabel: each bridge is summed under both B_a and B_{-2-a}.
  /// Once: each bridge contributes m_v φ(a) a single time.
  enum class BridgeCount { PerLabel, Once };

  Correction correction = Correction::PerBridge;
  PathCondition path_condition = PathCondition::Literal;
  Connectivity r_connectivity = Connectivity::Path;
  Connectivity bp_connectivity = Connectivity::Adjacent;
  BridgeCount bridge_count = BridgeCount::Once;

  std::string to_string() const;
};

std::string to_string(Interpretation::Correction c);
std::string to_string(Interpretation::PathCondition c);
std::string to_string(Interpretation::Connectivity c);
std::string to_string(Interpretation::BridgeCount c);

bool is_bridge(const ResolutionGraph& g, std::size_t v);

/// A path from v to a non-bridge -1 vertex along which every vertex other than
/// the target has genus 0 and a coefficient on the far side of a_v from -1.
bool connected_to_minus_one(const ResolutionGraph& g, std::size_t v,
                            Interpretation::PathCondition cond = Interpretation::PathCondition::Literal);

/// Same path rule with a bridge as the target (or plain adjacency).
bool connected_to_bridge(const ResolutionGraph& g, std::size_t v, Interpretation::PathCondition cond,
                         Interpretation::Connectivity how);

struct CombinatorialSets {
  std::map<Rational, std::set<std::size_t>> S;
  std::map<Rational, std::set<std::size_t>> R;
  std::map<Rational, std::set<std::size_t>> B;
  std::map<Rational, std::set<std::size_t>> Bp;
  long d = 0;
};

CombinatorialSets combinatorial_sets(const ResolutionGraph& g, const Interpretation& how = {});

/// Labels of the neighbors of a bridge: (a, -2-a), or (-2, 0) for a one-neighbor bridge.
std::pair<Rational, Rational> bridge_labels(const ResolutionGraph& g, std::size_t v);

}  // namespace ellgen
