// Command-line front end for the singular elliptic genus engine.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "ellgen/config.hpp"
#include "ellgen/corpus.hpp"
#include "ellgen/genus.hpp"
#include "ellgen/surface.hpp"
#include "ellgen/verify.hpp"
#include "ellgen/veys.hpp"

using namespace ellgen;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kValidation = 2, kMath = 3, kParse = 4 };

bool covers_exceptional(const ConfigFile& cfg) {
  for (const auto& c : cfg.model.curves)
    if (c.exceptional && !cfg.coeffs.count(c.label)) return false;
  return true;
}

/// Coefficients of every curve: given ones, with the missing exceptional ones solved.
Coefficients resolved_coefficients(const ConfigFile& cfg) {
  if (covers_exceptional(cfg)) return cfg.coeffs;
  Coefficients fixed;
  for (const auto& c : cfg.model.curves)
    if (!c.exceptional && cfg.coeffs.count(c.label)) fixed[c.label] = cfg.coeffs.at(c.label);
  Coefficients out = solve_discrepancies(cfg.model, fixed);
  for (const auto& [label, a] : fixed) out[label] = a;
  return out;
}

ConfigFile load(const std::string& path) {
  auto cfg = read_config_file(path);
  validate(cfg.model);
  return cfg;
}

GenusResult compute(const ConfigFile& cfg, const GenusOptions& opt) {
  if (covers_exceptional(cfg)) return ell(cfg.model, cfg.coeffs, opt);
  return ell_singular(cfg.model, opt, cfg.coeffs);
}

SPoly parse_ambient(const std::string& text) {
  std::vector<Rational> c;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) c.push_back(parse_rational(item));
  return SPoly::from_coeffs(0, c, 1);
}

int run_verify(const std::string& suite, const std::string& file, std::uint64_t seed, int count,
               const GenusOptions& opt) {
  Report report;
  if (suite == "invariance") {
    std::vector<Configuration> corpus;
    if (!file.empty()) {
      const auto cfg = load(file);
      corpus.push_back({file, cfg.model, resolved_coefficients(cfg)});
    } else {
      corpus = random_corpus(seed, count);
    }
    const auto s = invariance_suite(corpus, opt);
    report = s.report;
    std::cout << render(report);
    std::cout << "# " << s.equal << "/" << s.checked << " equal";
    for (int k = 1; k <= 5; ++k)
      std::cout << " case" << k << "=" << s.per_case[static_cast<std::size_t>(k)] - s.failures_per_case[static_cast<std::size_t>(k)]
                << "/" << s.per_case[static_cast<std::size_t>(k)];
    std::cout << "\n";
    if (s.counterexample) {
      std::cout << "# first counterexample, blown up at " << s.counterexample_point << ":\n";
      std::istringstream text(render_config(*s.counterexample));
      for (std::string line; std::getline(text, line);) std::cout << "#   " << line << "\n";
    }
    return all_pass(report) ? kOk : kChecksFailed;
  }
  if (suite == "residues") report = residue_suite();
  else if (suite == "theta") report = theta_suite(seed);
  else if (suite == "holomorphy") {
    if (file.empty()) {
      report = holomorphy_suite();
    } else {
      const auto cfg = load(file);
      const auto res = compute(cfg, opt);
      const auto h = verify_holomorphy(cfg.model, res.coeffs, res);
      report.push_back({"holomorphy/s=1", h.regular_at_one, ""});
      std::ostringstream d;
      d << "|theta(2z)Ell|=" << h.magnitudes[0] << "," << h.magnitudes[1] << "," << h.magnitudes[2];
      report.push_back({"holomorphy/lattice", h.decays, d.str()});
    }
  } else if (suite == "perturbation") report = perturbation_suite(seed, count);
  else if (suite == "localization") report = localization_suite();
  std::cout << render(report);
  return all_pass(report) ? kOk : kChecksFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular elliptic genus of normal surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  GenusOptions opt;
  auto& how = opt.interpretation;
  app.add_option("--q-order", opt.q_order, "truncation order in q")->check(CLI::Range(0, 64));
  app.add_option("--correction", how.correction)
      ->transform(CLI::CheckedTransformer(std::map<std::string, Interpretation::Correction>{
          {"per-bridge", Interpretation::Correction::PerBridge}, {"alt", Interpretation::Correction::Alt}}));
  app.add_option("--path-condition", how.path_condition)
      ->transform(CLI::CheckedTransformer(std::map<std::string, Interpretation::PathCondition>{
          {"literal", Interpretation::PathCondition::Literal}, {"interior", Interpretation::PathCondition::Interior}}));
  const std::map<std::string, Interpretation::Connectivity> connectivity{
      {"path", Interpretation::Connectivity::Path}, {"adjacent", Interpretation::Connectivity::Adjacent}};
  app.add_option("--r-connectivity", how.r_connectivity)->transform(CLI::CheckedTransformer(connectivity));
  app.add_option("--bp-connectivity", how.bp_connectivity)->transform(CLI::CheckedTransformer(connectivity));
  app.add_option("--bridge-count", how.bridge_count)
      ->transform(CLI::CheckedTransformer(std::map<std::string, Interpretation::BridgeCount>{
          {"once", Interpretation::BridgeCount::Once}, {"per-label", Interpretation::BridgeCount::PerLabel}}));

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "check the model invariants");
  auto* disc_cmd = app.add_subcommand("discrepancies", "solve the discrepancies of the exceptional curves");
  auto* ell_cmd = app.add_subcommand("ell", "singular elliptic genus as a q-series");
  auto* chi_cmd = app.add_subcommand("chi-y", "y times the q^0 coefficient");
  auto* veys_cmd = app.add_subcommand("veys", "stringy chi_y from the strata formula");
  auto* blowup_cmd = app.add_subcommand("blowup", "blow up a point and print the new configuration");
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  for (auto* c : {validate_cmd, disc_cmd, ell_cmd, chi_cmd, veys_cmd, blowup_cmd})
    c->add_option("file", file, "configuration file")->required();

  std::string ambient, at, suite = "invariance";
  std::uint64_t seed = 7;
  int count = 50;
  veys_cmd->add_option("--ambient-e", ambient, "E(X;u,1) coefficients, constant first: \"1,-2,1\"");
  blowup_cmd->add_option("--at", at, "generic | curve:L | node:L1,L2")->required();
  verify_cmd->add_option("file", file, "configuration file (optional)");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"invariance", "residues", "theta", "holomorphy", "perturbation", "localization"}));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--count", count)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      load(file);
      std::cout << "OK\n";
    } else if (*disc_cmd) {
      const auto cfg = load(file);
      const auto a = solve_discrepancies(cfg.model);
      std::string sep;
      for (const auto& c : cfg.model.curves) {
        if (!c.exceptional) continue;
        std::cout << sep << c.label << ": " << to_string(a.at(c.label));
        sep = ", ";
      }
      std::cout << "\n";
    } else if (*ell_cmd) {
      std::cout << compute(load(file), opt).to_text();
    } else if (*chi_cmd) {
      std::cout << chi_y(compute(load(file), opt)).to_string() << "\n";
    } else if (*veys_cmd) {
      const auto cfg = load(file);
      std::optional<SPoly> e;
      if (!ambient.empty()) e = parse_ambient(ambient);
      std::cout << veys_chi_y(cfg.model, resolved_coefficients(cfg), e).to_string() << "\n";
    } else if (*blowup_cmd) {
      const auto cfg = load(file);
      const auto b = blowup(cfg.model, resolved_coefficients(cfg), PointSpec::parse(at));
      std::cout << render_config({b.model, b.coeffs});
    } else if (*verify_cmd) {
      return run_verify(suite, file, seed, count, opt);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kValidation;
  } catch (const MathError& e) {
    std::cerr << e.what() << "\n";
    return kMath;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
