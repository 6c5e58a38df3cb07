// Benchmark harness for the normalized-gradient reduction.
//
//   ngrad-bench run --config exp.json --out results/
//   ngrad-bench sweep --nu 0,0.5,1 --learner ogd_const,kt --horizons 256,1024 --seeds 0,1
//   ngrad-bench ratefit --in results/summary_T*.json
//   ngrad-bench check [--suite theorem2] [--samples 10000] [--seed 0]

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ngrad/bench/commands.hpp"
#include "ngrad/errors.hpp"

namespace {

using ngrad::bench::kExitUsage;

std::vector<ngrad::LearnerKind> parse_learners(const std::vector<std::string>& names) {
  std::vector<ngrad::LearnerKind> out;
  for (const auto& n : names) out.push_back(ngrad::learner_kind_from_string(n));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized-gradient reduction benchmarks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  auto* run = app.add_subcommand("run", "Run one experiment config over its horizons");
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory");

  ngrad::bench::SweepGrid grid = ngrad::bench::default_sweep_grid();
  std::vector<std::string> learner_names;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Sweep nu x learner x horizon x seed on PowerNorm");
  sweep->add_option("--nu", grid.nus, "Hölder exponents")->delimiter(',');
  sweep->add_option("--learner", learner_names, "ogd_const, da_sqrt, kt, adagrad_da")
      ->delimiter(',');
  sweep->add_option("--horizons", grid.horizons, "Horizons T")->delimiter(',');
  sweep->add_option("--seeds", grid.seeds, "Seeds")->delimiter(',');
  sweep->add_option("--dim", grid.dimension, "Dimension");
  sweep->add_option("--distance", grid.start_distance, "||x_1 - x*||");
  sweep->add_option("--step-scale", grid.step_scale, "Learning-rate scale");
  sweep->add_option("--wealth-init", grid.wealth_init, "KT initial wealth d0");
  sweep->add_option("--grad-bound", grid.grad_bound_init, "AdaGradDa G");
  sweep->add_option("--threads", grid.threads, "Worker threads (0 = all cores)");
  sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");

  std::vector<std::string> ratefit_inputs;
  auto* ratefit = app.add_subcommand("ratefit", "Fit log gap vs log T from summary records");
  ratefit->add_option("--in", ratefit_inputs, "Summary JSON files")->required();

  std::optional<std::string> suite;
  ngrad::bench::CheckOptions check_options;
  std::string report_path;
  auto* check = app.add_subcommand("check", "Run property suites");
  check->add_option("--suite", suite, "Suite name (default: all)");
  check->add_option("--samples", check_options.samples, "Samples per family");
  check->add_option("--seed", check_options.seed, "Seed");
  check->add_option("--dim", check_options.dimension, "Dimension");
  check->add_option("--report", report_path, "Write the JSON report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*run) return ngrad::bench::cmd_run(config_path, out_dir, std::cerr, std::cerr);

  if (*sweep) {
    try {
      if (!learner_names.empty()) grid.learners = parse_learners(learner_names);
    } catch (const ngrad::ContractViolation& e) {
      std::cerr << e.what() << '\n';
      return kExitUsage;
    }
    if (sweep_out.empty()) return ngrad::bench::cmd_sweep(grid, std::cout, std::cerr);
    std::ofstream out(sweep_out);
    if (!out) {
      std::cerr << "cannot open " << sweep_out << '\n';
      return kExitUsage;
    }
    return ngrad::bench::cmd_sweep(grid, out, std::cerr);
  }

  if (*ratefit) {
    std::vector<std::filesystem::path> paths(ratefit_inputs.begin(), ratefit_inputs.end());
    return ngrad::bench::cmd_ratefit(paths, std::cout, std::cerr);
  }

  if (report_path.empty()) return ngrad::bench::cmd_check(suite, check_options, std::cout, std::cerr);
  std::ofstream out(report_path);
  if (!out) {
    std::cerr << "cannot open " << report_path << '\n';
    return kExitUsage;
  }
  return ngrad::bench::cmd_check(suite, check_options, out, std::cerr);
}
