#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellgen/config.hpp"
#include "ellgen/corpus.hpp"
#include "ellgen/genus.hpp"
#include "ellgen/perturb.hpp"
#include "ellgen/theta_numeric.hpp"

namespace ellgen {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Report = std::vector<Check>;

/// One "PASS|FAIL <name> <detail>" line per check.
std::string render(const Report& report);
bool all_pass(const Report& report);

// ---- blow-up invariance -------------------------------------------------

struct InvarianceResult {
  int case_number = 5;
  bool equal = false;
  int first_difference = -1;  ///< q-power of the first unequal coefficient
  QSeries<SFunc> before, after;
  BlownUp blown_up;
};

InvarianceResult verify_blowup_invariance(const SurfaceModel& model, const Coefficients& coeffs, const PointSpec& p,
                                          const GenusOptions& options = {});

struct InvarianceSummary {
  Report report;  ///< one check per (configuration, point), in input order
  int checked = 0;
  int equal = 0;
  std::array<int, 6> per_case{};          ///< points seen, indexed by case 1..5
  std::array<int, 6> failures_per_case{};
  std::optional<ConfigFile> counterexample;  ///< the first unequal configuration
  std::string counterexample_point;
};

/// Every applicable point of every configuration.
InvarianceSummary invariance_suite(const std::vector<Configuration>& corpus, const GenusOptions& options = {});

// ---- residues -----------------------------------------------------------

struct ResidueResult {
  Complex residue;
  Complex expected;
  double error = 0;
};

/// Numeric residue at t = 0 of the case's F(t) against its closed form.
/// `a` is the second coefficient for case 2 and a₁ for case 3 (a₂ = -2 - a₁).
ResidueResult verify_residue_case(int n, Complex z, Complex tau, const Rational& a = Rational(1));

Report residue_suite(Complex z = {0.17, 0.05}, Complex tau = {0, 0.8});

// ---- holomorphy ---------------------------------------------------------

struct HolomorphyResult {
  bool regular_at_one = false;
  std::array<double, 3> magnitudes{};  ///< |θ(2z)·Ell| at τ/2 + 1e-2, 1e-3, 1e-4
  std::array<double, 2> ratios{};      ///< shrink factor per decade of approach
  bool decays = false;                 ///< vanishing order at least 1 (ratios ≈ 10 or more)
};

HolomorphyResult verify_holomorphy(const SurfaceModel& model, const Coefficients& coeffs, const GenusResult& res,
                                   Complex tau = {0.1, 1.1});

Report holomorphy_suite();

// ---- theta identities ---------------------------------------------------

/// Translation rules, the two modular generators and exact/numeric agreement.
Report theta_suite(std::uint64_t seed = 1);

// ---- perturbation -------------------------------------------------------

/// b on non-(-1) curves from `base`, and m_j b_j = Σ b over the neighbors of every -1 curve.
Perturbation balanced_perturbation(const SurfaceModel& model, const Coefficients& coeffs,
                                   const std::map<std::string, Rational>& base);

Report perturbation_suite(std::uint64_t seed = 11, int count = 10);

// ---- localization on P¹ ---------------------------------------------------

/// Two-fixed-point sum for (P¹, a₁p₁ + a₂p₂) with S¹ weight t.
Complex localization_p1(const Rational& a1, const Rational& a2, Complex t, Complex z, Complex tau);

/// Exact form: specializes t to two rational multiples of z and requires the
/// results to agree (TDependence otherwise).
QSeries<SFunc> localization_p1_exact(const Rational& a1, const Rational& a2, int order);

Report localization_suite();

}  // namespace ellgen
