#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellgen/errors.hpp"
#include "ellgen/graded.hpp"
#include "ellgen/rational.hpp"

namespace ellgen {

struct Curve {
  std::string label;
  int genus = 0;
  long self_int = 0;
  bool exceptional = false;
};

/// Coefficient of each configuration curve, keyed by label.
using Coefficients = std::map<std::string, Rational>;

/// Smooth surface with a curve configuration: the curves, their pairwise
/// intersection numbers and the Chern numbers of the ambient surface.
struct SurfaceModel {
  std::vector<Curve> curves;
  IntMatrix pair_int;  ///< off-diagonal C_i·C_j, zero diagonal
  long c1sq = 0;
  long c2 = 0;

  std::size_t size() const { return curves.size(); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  std::size_t require(const std::string& label) const;

  /// K·C_i by adjunction.
  long k_dot(std::size_t i) const { return 2L * curves[i].genus - 2 - curves[i].self_int; }
  /// C_i·C_j including self-intersections.
  long dot(std::size_t i, std::size_t j) const { return i == j ? curves[i].self_int : pair_int(i, j); }

  /// The pairing on the basis {C_1..C_n, K}.
  IntMatrix pairing_form() const;
  std::vector<std::size_t> exceptional_indices() const;
};

class NegativeDefinitenessFailure : public ValidationError {
 public:
  explicit NegativeDefinitenessFailure(const std::string& what)
      : ValidationError("NegativeDefinitenessFailure", what) {}
};

class InvalidModel : public ValidationError {
 public:
  explicit InvalidModel(const std::string& what) : ValidationError("InvalidModel", what) {}
};

/// Checks structural invariants and negative definiteness of the exceptional lattice.
void validate(const SurfaceModel& model);

/// True when the pairing restricted to the given curves is negative definite
/// (leading principal minors alternate in sign, computed by Bareiss elimination).
bool negative_definite(const SurfaceModel& model, const std::vector<std::size_t>& subset);

/// Discrepancies of the exceptional curves from Σ_j a_j C_j·C_i = K·C_i.
///
/// `fixed` supplies coefficients of non-exceptional curves that enter the
/// right-hand side (a boundary divisor); by default they are absent.
Coefficients solve_discrepancies(const SurfaceModel& model, const Coefficients& fixed = {});

struct PointSpec {
  enum class Kind { Generic, OnCurve, Node };
  Kind kind = Kind::Generic;
  std::string first;
  std::string second;

  static PointSpec generic() { return {}; }
  static PointSpec on_curve(std::string c) { return {Kind::OnCurve, std::move(c), {}}; }
  static PointSpec node(std::string a, std::string b) { return {Kind::Node, std::move(a), std::move(b)}; }

  /// "generic", "curve:<label>", "node:<label>,<label>".
  static PointSpec parse(const std::string& text);
  std::string to_string() const;
};

struct BlownUp {
  SurfaceModel model;
  Coefficients coeffs;
  std::string new_label;
};

/// Blow-up at p. The new exceptional curve is appended last.
BlownUp blowup(const SurfaceModel& model, const Coefficients& coeffs, const PointSpec& p);

/// Rational coefficient of each curve; missing entries are 0.
Rational coefficient_of(const Coefficients& coeffs, const std::string& label);

/// Truncated cohomology class with rational coefficients over {C_1..C_n, K}.
using CohomClass = Graded<Rational>;

CohomClass unit_class(const SurfaceModel& model);
CohomClass curve_class(const SurfaceModel& model, std::size_t i);
CohomClass canonical_class(const SurfaceModel& model);
CohomClass cohom_multiply(const SurfaceModel& model, const CohomClass& a, const CohomClass& b);
Rational cohom_integrate(const SurfaceModel& model, const CohomClass& c);

}  // namespace ellgen
