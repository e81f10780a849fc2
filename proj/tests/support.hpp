#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ellgen/genus.hpp"
#include "ellgen/surface.hpp"

namespace test {

using namespace ellgen;

inline SPoly mono(long e, int root = 1, Rational c = 1) { return SPoly::monomial(c, e, root); }

/// Σ c·s^e from (e, c) pairs.
inline SPoly poly(const std::vector<std::pair<long, long>>& terms, int root = 1) {
  SPoly p(Rational(0), root);
  for (auto [e, c] : terms) p += mono(e, root, Rational(c));
  return p;
}

inline SFunc frac(const SPoly& n, const SPoly& d) { return SFunc(n, d); }

/// Random Laurent polynomial in s with small integer coefficients.
inline SPoly random_poly(std::mt19937_64& rng, int root = 2) {
  std::uniform_int_distribution<int> coef(-3, 3), lo(-3, 1), len(1, 4);
  const int l = lo(rng), n = len(rng);
  SPoly p(Rational(0), root);
  for (int i = 0; i < n; ++i) p += mono(l + i, root, Rational(coef(rng)));
  return p.is_zero() ? mono(l, root) : p;
}

inline SFunc random_sfunc(std::mt19937_64& rng, int root = 2) {
  return SFunc(random_poly(rng, root), random_poly(rng, root));
}

/// Small model builder: curves are added in order, edges by label.
struct Model {
  SurfaceModel m;
  Coefficients c;

  Model(long c1sq, long c2) {
    m.c1sq = c1sq;
    m.c2 = c2;
    m.pair_int = IntMatrix::Zero(0, 0);
  }
  Model& curve(const std::string& label, int genus, long self, bool exceptional, std::optional<Rational> a = {}) {
    m.curves.push_back({label, genus, self, exceptional});
    const auto n = static_cast<Eigen::Index>(m.curves.size());
    IntMatrix grown = IntMatrix::Zero(n, n);
    grown.topLeftCorner(n - 1, n - 1) = m.pair_int;
    m.pair_int = grown;
    if (a) c[label] = *a;
    return *this;
  }
  Model& edge(const std::string& a, const std::string& b, long mult = 1) {
    const auto i = static_cast<Eigen::Index>(m.require(a)), j = static_cast<Eigen::Index>(m.require(b));
    m.pair_int(i, j) = m.pair_int(j, i) = mult;
    return *this;
  }
};

/// χ_{-y} = χ⁰ - χ¹y + χ²y² from Noether's formula, written out independently of the library.
inline SPoly hirzebruch_chi_minus_y(long c1sq, long c2) {
  const Rational chi0 = Rational(c1sq + c2) / 12, chi1 = Rational(c1sq - 5 * c2) / 6;
  SPoly p(Rational(0), 1);
  p += mono(0, 1, chi0);
  p += mono(1, 1, -chi1);
  p += mono(2, 1, chi0);
  return p;
}

}  // namespace test
