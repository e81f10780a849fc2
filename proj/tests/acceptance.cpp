// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "ellgen/corpus.hpp"
#include "ellgen/verify.hpp"
#include "ellgen/veys.hpp"

using namespace ellgen;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Failures of a report, at most three of them spelled out.
std::string failures(const Report& r) {
  std::ostringstream out;
  int bad = 0;
  for (const auto& c : r)
    if (!c.pass && bad++ < 3) out << " [" << c.name << (c.detail.empty() ? "" : " " + c.detail) << "]";
  std::ostringstream head;
  head << (static_cast<int>(r.size()) - bad) << "/" << r.size() << " checks pass" << out.str();
  return head.str();
}

Outcome invariance() {
  const auto start = std::chrono::steady_clock::now();
  GenusOptions opt;
  opt.q_order = 5;
  const auto s = invariance_suite(random_corpus(7, 50), opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool covered = true;
  std::ostringstream d;
  d << s.equal << "/" << s.checked << " blow-ups equal;";
  for (int k = 1; k <= 5; ++k) {
    const auto i = static_cast<std::size_t>(k);
    covered = covered && s.per_case[i] > 0;
    d << " case" << k << "=" << s.per_case[i] - s.failures_per_case[i] << "/" << s.per_case[i];
  }
  d << "; " << static_cast<int>(secs) << "s";
  if (s.counterexample) d << "; first counterexample at " << s.counterexample_point;
  return {s.equal == s.checked && covered && secs < 300, d.str()};
}

Outcome star() {
  const auto cfg = star_example();
  const auto a = solve_discrepancies(cfg.model);
  const bool disc = a.at("E1") == -1 && a.at("E2") == -1 && a.at("E3") == -1 && a.at("E4") == -2;
  const bool zero = correction_sum(graph_from(cfg.model, cfg.coeffs), 5).is_zero();
  const auto res = ell(cfg.model, a);
  const auto h = verify_holomorphy(cfg.model, a, res);
  std::ostringstream d;
  d << "discrepancies " << (disc ? "(-1,-1,-1,-2)" : "wrong") << "; correction " << (zero ? "0" : "nonzero")
    << "; regular at z=0 " << (h.regular_at_one ? "yes" : "no") << "; decay per decade " << h.ratios[0] << ", "
    << h.ratios[1];
  const auto suite = holomorphy_suite();
  d << "; suite " << failures(suite);
  return {disc && zero && h.regular_at_one && h.decays && all_pass(suite), d.str()};
}

Outcome localization() {
  const auto r = localization_suite();
  return {all_pass(r), failures(r)};
}

Outcome veys() {
  GenusOptions o;
  o.q_order = 0;
  int ok = 0, n = 0;
  std::string first;
  for (const auto& cfg : bridge_corpus(11, 25)) {
    ++n;
    const bool eq = chi_y(ell(cfg.model, cfg.coeffs, o)) == veys_chi_y(cfg.model, cfg.coeffs);
    ok += eq;
    if (!eq && first.empty()) first = " first mismatch " + cfg.name;
  }
  return {ok == n && n >= 20, std::to_string(ok) + "/" + std::to_string(n) + " configurations" + first};
}

Outcome perturbation() {
  const auto r = perturbation_suite();
  return {all_pass(r), failures(r)};
}

Outcome theta() {
  const auto r = theta_suite(1);
  return {all_pass(r), failures(r)};
}

Outcome residues() {
  const auto r = residue_suite();
  return {all_pass(r), failures(r)};
}

Outcome smooth() {
  GenusOptions o;
  o.q_order = 5;
  int ok = 0;
  std::ostringstream d;
  for (auto [c1sq, c2] : {std::pair{8L, 4L}, {9L, 3L}, {0L, 24L}}) {
    SurfaceModel m;
    m.c1sq = c1sq;
    m.c2 = c2;
    m.pair_int = IntMatrix::Zero(0, 0);
    const SFunc got = chi_y(ell(m, {}, o));
    // χ⁰ - χ¹y + χ⁰y² with χ⁰ = (c1² + c2)/12 and χ¹ = (c1² - 5c2)/6.
    const Rational chi0 = Rational(c1sq + c2) / 12, chi1 = Rational(c1sq - 5 * c2) / 6;
    const SFunc want(SPoly::from_coeffs(0, {chi0, -chi1, chi0}, 1));
    ok += got == want;
    d << " (" << c1sq << "," << c2 << "): " << got.to_string() << ";";
  }
  return {ok == 3, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"blow-up invariance", invariance},  {"star example", star},       {"localization on P1", localization},
      {"chi_y against Veys", veys},        {"perturbation limits", perturbation},
      {"theta identities", theta},         {"residues", residues},       {"smooth reduction", smooth},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
