#pragma once

#include "ellgen/genus.hpp"
#include "ellgen/rfunc.hpp"

namespace ellgen {

/// Coefficients a_i + eps·b_i, realized exactly through w = y^eps.
struct Perturbation {
  Coefficients b;
};

/// Every curve gets the generic factor at a_i + eps·b_i; a -1 curve needs b_i ≠ 0.
std::vector<FactorSpec> perturbed_factors(const SurfaceModel& model, const Coefficients& coeffs,
                                          const Perturbation& p);

/// The perturbed genus with coefficients in the r-layer (left unreduced).
QSeries<RFunc> perturbed_ell(const SurfaceModel& model, const Coefficients& coeffs, const Perturbation& p,
                             int order);

/// lim eps -> 0 of the perturbed genus. Throws PoleAtOne when it does not exist.
QSeries<SFunc> perturbed_limit(const SurfaceModel& model, const Coefficients& coeffs, const Perturbation& p,
                               int order);

}  // namespace ellgen
