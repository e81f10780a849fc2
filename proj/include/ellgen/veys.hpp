#pragma once

#include <optional>

#include "ellgen/graph.hpp"
#include "ellgen/sfunc.hpp"

namespace ellgen {

/// E(X; u, 1) = χ⁰ - χ¹u + χ²u² from Noether's formula and Serre duality.
SPoly noether_e_polynomial(long c1sq, long c2);

/// m(y-1)²/((y^(a1+1)-1)(y^(a2+1)-1)): the contribution of one bridge.
SFunc veys_bridge_term(long m, const Rational& a1, const Rational& a2);

/// Stringy χ_y genus in the bridge-only setting: a sum over strata of the
/// complement of the bridges, plus one rational term per bridge. `ambient` is
/// E(X; u, 1) as a polynomial in u (root order 1). Throws
/// VeysHypothesisViolated unless every -1 vertex is a bridge with no -1 neighbor.
SFunc veys_chi_y(const ResolutionGraph& g, const SPoly& ambient);

SFunc veys_chi_y(const SurfaceModel& model, const Coefficients& coeffs,
                 const std::optional<SPoly>& ambient = std::nullopt);

}  // namespace ellgen
