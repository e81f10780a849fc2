#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellgen/surface.hpp"

namespace ellgen {

struct Configuration {
  std::string name;
  SurfaceModel model;
  Coefficients coeffs;
};

/// Every point at which a blow-up is defined: generic, each curve, each node.
std::vector<PointSpec> applicable_points(const SurfaceModel& model);

/// Which blow-up case a point falls under:
/// 1 node of two -1 curves, 2 a -1 curve meets another coefficient (or a point
/// on a single -1 curve), 3 node with a1 + a2 = -2, 4 point on a single -2
/// curve, 5 everything else.
int classify_point(const SurfaceModel& model, const Coefficients& coeffs, const PointSpec& p);

/// Deterministic pseudo-random configurations (at most 7 curves, so that one
/// blow-up stays within 8). Kinds rotate so that every case is represented.
std::vector<Configuration> random_corpus(std::uint64_t seed, int count);

/// Three (0,-4) curves each meeting a central (0,-1) curve once; all exceptional.
/// Discrepancies solve to (-1, -1, -1, -2).
Configuration star_example();

/// Resolved cone over a plane cubic: an exceptional genus-1 curve E with
/// E² = -3 in a ruled surface (c1² = c2 = 0), plus a ruling H through it.
/// Coefficients are solved (a_E = -1, a_H = 0).
Configuration simple_elliptic_example();

/// Configurations whose -1 curves are all bridges (the stringy χ_y hypothesis).
std::vector<Configuration> bridge_corpus(std::uint64_t seed, int count);

}  // namespace ellgen
