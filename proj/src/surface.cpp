#include "ellgen/surface.hpp"

#include <set>

namespace ellgen {

std::optional<std::size_t> SurfaceModel::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].label == label) return i;
  return std::nullopt;
}

std::size_t SurfaceModel::require(const std::string& label) const {
  auto i = index_of(label);
  if (!i) throw InvalidModel("unknown curve '" + label + "'");
  return *i;
}

IntMatrix SurfaceModel::pairing_form() const {
  const auto n = static_cast<Eigen::Index>(size());
  IntMatrix m = IntMatrix::Zero(n + 1, n + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = dot(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    m(i, n) = m(n, i) = k_dot(static_cast<std::size_t>(i));
  }
  m(n, n) = c1sq;
  return m;
}

std::vector<std::size_t> SurfaceModel::exceptional_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].exceptional) out.push_back(i);
  return out;
}

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;

ZMatrix restricted(const SurfaceModel& model, const std::vector<std::size_t>& subset) {
  ZMatrix m(subset.size(), std::vector<Integer>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) m[i][j] = model.dot(subset[i], subset[j]);
  return m;
}

/// In-place Bareiss elimination without pivoting; returns the leading
/// principal minors, stopping at the first zero one.
std::vector<Integer> leading_minors(ZMatrix m) {
  const std::size_t n = m.size();
  std::vector<Integer> minors;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    minors.push_back(m[k][k]);
    if (m[k][k] == 0) break;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return minors;
}

}  // namespace

bool negative_definite(const SurfaceModel& model, const std::vector<std::size_t>& subset) {
  const auto minors = leading_minors(restricted(model, subset));
  if (minors.size() < subset.size()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

void validate(const SurfaceModel& model) {
  const std::size_t n = model.size();
  if (static_cast<std::size_t>(model.pair_int.rows()) != n || static_cast<std::size_t>(model.pair_int.cols()) != n)
    throw InvalidModel("intersection matrix has the wrong shape");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = model.curves[i];
    if (c.label.empty()) throw InvalidModel("empty curve label");
    if (!labels.insert(c.label).second) throw InvalidModel("duplicate label '" + c.label + "'");
    if (c.genus < 0) throw InvalidModel("negative genus on '" + c.label + "'");
    if (model.pair_int(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) != 0)
      throw InvalidModel("nonzero diagonal entry for '" + c.label + "'");
    for (std::size_t j = 0; j < n; ++j) {
      const long v = model.pair_int(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      if (v < 0) throw InvalidModel("negative intersection number");
      if (v != model.pair_int(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)))
        throw InvalidModel("intersection matrix is not symmetric");
    }
  }
  const auto exc = model.exceptional_indices();
  if (!exc.empty() && !negative_definite(model, exc))
    throw NegativeDefinitenessFailure("exceptional curves do not span a negative definite lattice");
}

Coefficients solve_discrepancies(const SurfaceModel& model, const Coefficients& fixed) {
  const auto exc = model.exceptional_indices();
  const std::size_t n = exc.size();
  if (n == 0) return {};

  // Augmented integer system scaled by the common denominator of the fixed part.
  Integer scale = 1;
  for (const auto& [label, a] : fixed) {
    auto i = model.index_of(label);
    if (i && !model.curves[*i].exceptional) scale = lcm(scale, a.get_den());
  }
  ZMatrix m(n, std::vector<Integer>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = scale * model.dot(exc[r], exc[c]);
    Rational rhs(model.k_dot(exc[r]));
    for (const auto& [label, a] : fixed) {
      auto i = model.index_of(label);
      if (!i || model.curves[*i].exceptional) continue;
      rhs -= a * model.dot(*i, exc[r]);
    }
    rhs *= scale;
    m[r][n] = rhs.get_num();
  }

  // Bareiss with row pivoting to upper triangular form.
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) throw SingularIntersectionMatrix("exceptional intersection matrix is degenerate");
    std::swap(m[k], m[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }

  std::vector<Rational> a(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(m[k][j]) * a[j];
    a[k] = acc / Rational(m[k][k]);
    a[k].canonicalize();
  }
  Coefficients out;
  for (std::size_t k = 0; k < n; ++k) out[model.curves[exc[k]].label] = a[k];
  return out;
}

PointSpec PointSpec::parse(const std::string& text) {
  if (text == "generic") return generic();
  if (text.rfind("curve:", 0) == 0 && text.size() > 6) return on_curve(text.substr(6));
  if (text.rfind("node:", 0) == 0) {
    const auto rest = text.substr(5);
    const auto comma = rest.find(',');
    if (comma != std::string::npos && comma > 0 && comma + 1 < rest.size())
      return node(rest.substr(0, comma), rest.substr(comma + 1));
  }
  throw InvalidPoint("cannot parse point '" + text + "' (expected generic, curve:L or node:L1,L2)");
}

std::string PointSpec::to_string() const {
  switch (kind) {
    case Kind::Generic: return "generic";
    case Kind::OnCurve: return "curve:" + first;
    case Kind::Node: return "node:" + first + "," + second;
  }
  return {};
}

Rational coefficient_of(const Coefficients& coeffs, const std::string& label) {
  auto it = coeffs.find(label);
  return it == coeffs.end() ? Rational(0) : it->second;
}

BlownUp blowup(const SurfaceModel& model, const Coefficients& coeffs, const PointSpec& p) {
  std::vector<std::size_t> through;
  Rational a_new(1);
  switch (p.kind) {
    case PointSpec::Kind::Generic: break;
    case PointSpec::Kind::OnCurve: {
      auto i = model.index_of(p.first);
      if (!i) throw InvalidPoint("unknown curve '" + p.first + "'");
      through = {*i};
      a_new = coefficient_of(coeffs, p.first) + 1;
      break;
    }
    case PointSpec::Kind::Node: {
      auto i = model.index_of(p.first);
      auto j = model.index_of(p.second);
      if (!i || !j) throw InvalidPoint("unknown curve in '" + p.to_string() + "'");
      if (*i == *j) throw InvalidPoint("a node needs two distinct curves");
      if (model.pair_int(static_cast<Eigen::Index>(*i), static_cast<Eigen::Index>(*j)) < 1)
        throw InvalidPoint(p.first + " and " + p.second + " do not meet");
      through = {*i, *j};
      a_new = coefficient_of(coeffs, p.first) + coefficient_of(coeffs, p.second) + 1;
      break;
    }
  }

  std::string label;
  for (std::size_t k = model.size() + 1;; ++k) {
    label = "E" + std::to_string(k);
    if (!model.index_of(label)) break;
  }

  BlownUp out;
  out.new_label = label;
  auto& m = out.model;
  m.curves = model.curves;
  m.curves.push_back(Curve{label, 0, -1, true});
  const auto n = static_cast<Eigen::Index>(model.size());
  m.pair_int = IntMatrix::Zero(n + 1, n + 1);
  m.pair_int.topLeftCorner(n, n) = model.pair_int;
  for (auto i : through) {
    m.curves[i].self_int -= 1;
    m.pair_int(static_cast<Eigen::Index>(i), n) = m.pair_int(n, static_cast<Eigen::Index>(i)) = 1;
  }
  if (through.size() == 2) {
    const auto i = static_cast<Eigen::Index>(through[0]);
    const auto j = static_cast<Eigen::Index>(through[1]);
    m.pair_int(i, j) -= 1;
    m.pair_int(j, i) -= 1;
  }
  m.c1sq = model.c1sq - 1;
  m.c2 = model.c2 + 1;
  out.coeffs = coeffs;
  out.coeffs[label] = a_new;
  return out;
}

CohomClass unit_class(const SurfaceModel& model) {
  return CohomClass::scalar(model.size() + 1, Rational(1), Rational(0));
}

CohomClass curve_class(const SurfaceModel& model, std::size_t i) {
  CohomClass c(model.size() + 1, Rational(0));
  c.deg1[i] = 1;
  return c;
}

CohomClass canonical_class(const SurfaceModel& model) {
  CohomClass c(model.size() + 1, Rational(0));
  c.deg1[model.size()] = 1;
  return c;
}

CohomClass cohom_multiply(const SurfaceModel& model, const CohomClass& a, const CohomClass& b) {
  return multiply(a, b, model.pairing_form(), Rational(0));
}

Rational cohom_integrate(const SurfaceModel& /*model*/, const CohomClass& c) { return c.deg2; }

}  // namespace ellgen
