#include "ellgen/corpus.hpp"

#include <random>

#include "ellgen/graph.hpp"

namespace ellgen {

std::vector<PointSpec> applicable_points(const SurfaceModel& model) {
  std::vector<PointSpec> out{PointSpec::generic()};
  for (const auto& c : model.curves) out.push_back(PointSpec::on_curve(c.label));
  for (std::size_t i = 0; i < model.size(); ++i)
    for (std::size_t j = i + 1; j < model.size(); ++j)
      if (model.pair_int(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) > 0)
        out.push_back(PointSpec::node(model.curves[i].label, model.curves[j].label));
  return out;
}

int classify_point(const SurfaceModel& /*model*/, const Coefficients& coeffs, const PointSpec& p) {
  switch (p.kind) {
    case PointSpec::Kind::Generic: return 5;
    case PointSpec::Kind::OnCurve: {
      const Rational a = coefficient_of(coeffs, p.first);
      if (a == -1) return 2;
      if (a == -2) return 4;
      return 5;
    }
    case PointSpec::Kind::Node: {
      const Rational a1 = coefficient_of(coeffs, p.first), a2 = coefficient_of(coeffs, p.second);
      if (a1 == -1 && a2 == -1) return 1;
      if (a1 == -1 || a2 == -1) return 2;
      if (a1 + a2 == -2) return 3;
      return 5;
    }
  }
  return 5;
}

namespace {

class Builder {
 public:
  explicit Builder(std::mt19937_64& rng) : rng_(rng) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::size_t add(int genus, long self, bool exceptional, std::optional<Rational> a = std::nullopt) {
    const std::string label = "C" + std::to_string(model.curves.size() + 1);
    model.curves.push_back(Curve{label, genus, self, exceptional});
    if (a) coeffs[label] = *a;
    return model.curves.size() - 1;
  }

  void connect(std::size_t i, std::size_t j, long mult = 1) { edges.push_back({i, j, mult}); }

  /// A coefficient from [-4, 3] other than -1, sometimes with denominator 2 or 3.
  Rational coefficient() {
    for (;;) {
      const int den = chance(0.7) ? 1 : uniform(2, 3);
      Rational a(uniform(-4 * den, 3 * den), den);
      a.canonicalize();
      if (a != -1) return a;
    }
  }

  Configuration finish(std::string name) {
    const auto n = static_cast<Eigen::Index>(model.curves.size());
    model.pair_int = IntMatrix::Zero(n, n);
    for (const auto& e : edges) {
      model.pair_int(static_cast<Eigen::Index>(e.i), static_cast<Eigen::Index>(e.j)) += e.mult;
      model.pair_int(static_cast<Eigen::Index>(e.j), static_cast<Eigen::Index>(e.i)) += e.mult;
    }
    model.c1sq = uniform(-2, 9);
    model.c2 = uniform(0, 14);
    return Configuration{std::move(name), std::move(model), std::move(coeffs)};
  }

  SurfaceModel model;
  Coefficients coeffs;

 private:
  struct Edge {
    std::size_t i, j;
    long mult;
  };
  std::mt19937_64& rng_;
  std::vector<Edge> edges;
};

long self_int(Builder& b) { return -b.uniform(1, 5); }
int genus(Builder& b) { return b.chance(0.8) ? 0 : 1; }

/// A random tree on the given curves plus occasionally one extra edge.
void wire(Builder& b, std::size_t first, std::size_t last) {
  for (std::size_t v = first + 1; v < last; ++v)
    b.connect(static_cast<std::size_t>(b.uniform(static_cast<int>(first), static_cast<int>(v) - 1)), v,
              b.chance(0.15) ? 2 : 1);
}

/// Curves with assigned coefficients, with a planted structure for the given case.
Configuration assigned(Builder& b, int plant, int index) {
  const int extra = b.uniform(1, 3);
  switch (plant) {
    case 1: {  // two -1 curves meeting
      auto u = b.add(genus(b), self_int(b), false, Rational(-1));
      auto v = b.add(genus(b), self_int(b), false, Rational(-1));
      b.connect(u, v, b.chance(0.2) ? 2 : 1);
      break;
    }
    case 2: {  // -1 curve meeting a generic coefficient
      auto u = b.add(genus(b), self_int(b), false, Rational(-1));
      auto v = b.add(genus(b), self_int(b), false, b.coefficient());
      b.connect(u, v);
      break;
    }
    case 3: {  // node with a1 + a2 = -2
      const Rational a = b.coefficient();
      auto u = b.add(genus(b), self_int(b), false, a);
      auto v = b.add(genus(b), self_int(b), false, -2 - a);
      b.connect(u, v);
      break;
    }
    case 4: {  // a -2 curve
      b.add(genus(b), self_int(b), false, Rational(-2));
      break;
    }
    default: break;
  }
  const std::size_t start = b.model.curves.size();
  for (int k = 0; k < extra; ++k)
    b.add(genus(b), self_int(b), false, b.chance(0.15) ? Rational(-1) : b.coefficient());
  const std::size_t end = b.model.curves.size();
  if (start > 0) b.connect(static_cast<std::size_t>(b.uniform(0, static_cast<int>(start) - 1)), start);
  wire(b, start, end);
  return b.finish("assigned-" + std::to_string(plant) + "-" + std::to_string(index));
}

/// Exceptional configurations with solved discrepancies: chains and stars,
/// sometimes with a non-exceptional curve of coefficient 0 attached. Solutions
/// outside [-4, 3] or with denominators above 3 are redrawn.
Configuration solved(std::mt19937_64& rng, int index) {
  for (;;) {
    Builder b(rng);
    const int n = b.uniform(1, 5);
    for (int k = 0; k < n; ++k) b.add(b.chance(0.85) ? 0 : 1, -b.uniform(1, 5), true);
    const bool chain = b.chance(0.5);
    for (int k = 1; k < n; ++k) b.connect(chain ? static_cast<std::size_t>(k - 1) : 0, static_cast<std::size_t>(k));
    if (b.chance(0.4)) {
      auto h = b.add(0, b.uniform(-1, 3), false, Rational(0));
      b.connect(static_cast<std::size_t>(b.uniform(0, n - 1)), h);
    }
    auto cfg = b.finish("solved-" + std::to_string(index));
    if (!negative_definite(cfg.model, cfg.model.exceptional_indices())) continue;
    const auto solved = solve_discrepancies(cfg.model);
    bool small = true;
    for (const auto& [label, a] : solved)
      if (a < -4 || a > 3 || a.get_den() > 3) small = false;
    if (!small) continue;
    for (const auto& [label, a] : solved) cfg.coeffs[label] = a;
    return cfg;
  }
}

}  // namespace

std::vector<Configuration> random_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (int i = 0; i < count; ++i) {
    const int kind = i % 6;
    if (kind == 5) {
      out.push_back(solved(rng, i));
    } else {
      Builder b(rng);
      out.push_back(assigned(b, kind, i));
    }
  }
  return out;
}

std::vector<Configuration> bridge_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (int i = 0; out.size() < static_cast<std::size_t>(count); ++i) {
    Builder b(rng);
    const int bridges = b.uniform(1, 2);
    for (int k = 0; k < bridges; ++k) {
      if (b.chance(0.3)) {
        auto u = b.add(genus(b), self_int(b), false, Rational(-2));
        auto v = b.add(0, self_int(b), false, Rational(-1));
        b.connect(u, v);
      } else {
        Rational a = b.coefficient();
        if (a == -1) a = 0;
        auto u = b.add(genus(b), self_int(b), false, a);
        auto v = b.add(0, self_int(b), false, Rational(-1));
        auto w = b.add(genus(b), self_int(b), false, -2 - a);
        b.connect(u, v);
        b.connect(v, w);
      }
    }
    const int extra = b.uniform(0, 2);
    for (int k = 0; k < extra; ++k) {
      auto c = b.add(genus(b), self_int(b), false, b.coefficient());
      std::vector<std::size_t> hosts;
      for (std::size_t h = 0; h < c; ++h)
        if (b.coeffs[b.model.curves[h].label] != -1) hosts.push_back(h);
      if (!hosts.empty() && b.chance(0.7)) b.connect(hosts[static_cast<std::size_t>(b.uniform(0, static_cast<int>(hosts.size()) - 1))], c);
    }
    auto cfg = b.finish("bridge-" + std::to_string(i));
    const auto g = graph_from(cfg.model, cfg.coeffs);
    bool ok = true;
    for (std::size_t v = 0; v < g.size(); ++v)
      if (g.is_minus_one(v) && !is_bridge(g, v)) ok = false;
    if (ok) out.push_back(std::move(cfg));
  }
  return out;
}

Configuration star_example() {
  Configuration cfg;
  cfg.name = "star";
  auto& m = cfg.model;
  m.c1sq = 5;
  m.c2 = 7;
  for (int i = 1; i <= 3; ++i) m.curves.push_back({"E" + std::to_string(i), 0, -4, true});
  m.curves.push_back({"E4", 0, -1, true});
  m.pair_int = IntMatrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) m.pair_int(i, 3) = m.pair_int(3, i) = 1;
  cfg.coeffs = solve_discrepancies(m);
  return cfg;
}

Configuration simple_elliptic_example() {
  Configuration cfg;
  cfg.name = "simple-elliptic";
  auto& m = cfg.model;
  m.curves = {{"E", 1, -3, true}, {"H", 0, 0, false}};
  m.pair_int = IntMatrix::Zero(2, 2);
  m.pair_int(0, 1) = m.pair_int(1, 0) = 1;
  cfg.coeffs = solve_discrepancies(m);
  cfg.coeffs["H"] = 0;
  return cfg;
}

}  // namespace ellgen
