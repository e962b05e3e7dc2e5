#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "holoform/experiment.hpp"
#include "holoform/specparse.hpp"

namespace {

using holoform::ExperimentConfig;

void add_common(CLI::App* sub, ExperimentConfig& cfg, std::string& out_dir) {
  sub->add_option("--space", cfg.space, "space spec p=..,s=..,sigma=..,K=<weight spec>");
  sub->add_option("--quad-depth", cfg.quad_depth, "radial panels J of the disc rule (<= 12)");
  sub->add_option("--quad-angles", cfg.quad_angles, "angles M of the disc rule (<= 4096)");
  sub->add_option("--sup-depth", cfg.sup_depth, "rings of sup sample points (<= 10)");
  sub->add_option("--sup-rotations", cfg.sup_rotations, "sup sample points per ring");
  sub->add_option("--terms", cfg.terms, "series truncation degree N");
  sub->add_option("--slack", cfg.slack, "comparability slack");
  sub->add_option("--seed", cfg.seed, "seed for random pairs and initial conditions");
  sub->add_option("--out", out_dir, "output directory for CSV and JSON");
  sub->add_option("--m-variant", cfg.m_variant, "proof or statement form of M0/M2");
  sub->add_flag("--relaxed-t", cfg.relaxed_t, "p = 2 relaxed lower bound on t");
}

void print_table(const holoform::ResultTable& t) {
  for (const auto& r : t.rows) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + v;
    std::printf("%-4s %-26s %-18s delta=%-12s %s%s\n", r.pass ? "PASS" : "FAIL", r.label.c_str(),
                holoform::format_number(r.value).c_str(), holoform::format_number(r.refinement_delta).c_str(),
                params.c_str(), r.error.empty() ? "" : ("  error: " + r.error).c_str());
  }
  if (t.extra.contains("warnings")) {
    for (const auto& w : t.extra["warnings"]) std::printf("warning: %s\n", w.get<std::string>().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Besov-Morrey space computations on the unit disc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", holoform::version_string());

  ExperimentConfig cfg;
  std::string out_dir = ".";

  auto* weights = app.add_subcommand("weights", "integrability of phi_K(x)/x near 0 and phi_K(x)/x^{1+sigma} at infinity");
  weights->add_option("--K", cfg.weight, "weight spec; defaults to the K of --space");
  weights->add_option("--sigma", cfg.sigma, "sigma; defaults to the sigma of --space");

  auto* frac = app.add_subcommand("fracderiv", "fractional derivative, coefficient against integral form");
  frac->add_option("--f", cfg.function, "test function spec")->required();
  frac->add_option("--t", cfg.t, "order t > 0");
  frac->add_option("--b", cfg.b, "kernel parameter b > 1");

  auto* norm = app.add_subcommand("norm", "Besov and Besov-Morrey norms of a test function");
  norm->add_option("--f", cfg.function, "test function spec")->required();

  auto* carl = app.add_subcommand("carleson", "K-Carleson constant of |f'|^p (1-|z|^2)^{p-2+s}");
  carl->add_option("--f", cfg.function, "test function spec")->required();

  auto* verify = app.add_subcommand("verify", "comparability checks");
  verify->add_option("--theorem", cfg.theorem, "21, 23, 29, 25, 28 or gap")->required();
  verify->add_option("--params", cfg.params_path, "key=value parameter file");
  verify->add_flag("--cor29-literal", cfg.cor29_literal, "literal I_n display instead of the proof form");

  auto* ode = app.add_subcommand("ode", "series solutions and the constants of Theorems 3.1/3.2");
  ode->add_option("--system", cfg.system_path, "system file")->required();
  ode->add_option("--theorem", cfg.theorem, "31 or 32")->required();
  ode->add_option("--threshold", cfg.threshold, "smallness threshold for the first two constants");

  for (CLI::App* sub : {weights, frac, norm, carl, verify, ode}) add_common(sub, cfg, out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  for (CLI::App* sub : {weights, frac, norm, carl, verify, ode}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }

  holoform::ResultTable table;
  try {
    table = holoform::run_experiment(cfg);
    holoform::write_outputs(table, out_dir);
  } catch (const holoform::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const holoform::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  print_table(table);
  const bool ok = table.all_pass();
  std::printf("%s: %zu rows, %s\n", cfg.command.c_str(), table.rows.size(), ok ? "all pass" : "failures");
  return ok ? 0 : 2;
}
