#include "ngrad/bench/commands.hpp"

#include <fstream>

#include <json.hpp>

#include "ngrad/bench/config.hpp"
#include "ngrad/bench/ratefit.hpp"
#include "ngrad/bench/records.hpp"
#include "ngrad/errors.hpp"

namespace ngrad::bench {

using nlohmann::json;

namespace {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace

int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
            std::ostream& log, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = parse_experiment(read_json_file(config_path));
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    err << "cannot create " << out_dir << ": " << ec.message() << '\n';
    return kExitUsage;
  }

  const Problem problem = make_problem(cfg.problem);
  const json config_json = to_json(cfg);
  int status = kExitOk;
  for (std::size_t horizon : cfg.horizons) {
    const LearnerConfig learner = make_learner(cfg.learner, problem, horizon, cfg.seed);
    RunRecord run;
    try {
      run = learner.kind == LearnerKind::AdaGradDa
                ? run_adagrad_warmup(learner, problem, horizon)
                : run_normalized(learner, problem, horizon, cfg.eps_zero);
    } catch (const NumericalFailure& e) {
      err << "numerical failure: " << e.what() << '\n';
      return kExitFailure;
    }
    const BoundReport report = bound_report(run, problem, learner);

    const std::string tag = "_T" + std::to_string(horizon);
    {
      std::ofstream csv(out_dir / (cfg.trajectory_prefix + tag + ".csv"));
      write_trajectory_csv(csv, run, report);
    }
    {
      std::ofstream summary(out_dir / (cfg.summary_prefix + tag + ".json"));
      summary << summary_record(config_json, problem.spec().nu, run, report).dump(2) << '\n';
    }

    const BoundCheck check = check_bounds(report);
    log << to_string(learner.kind) << ' ' << problem.name() << " T=" << horizon
        << " steps=" << run.steps_taken << (run.terminated_early ? " (optimal point)" : "")
        << " gap=" << format_real(report.measured)
        << " closed_form=" << format_real(report.closed_form_bound) << ' ' << check.describe()
        << '\n';
    if (!check.ok()) {
      err << "bound violation: learner=" << to_string(learner.kind) << " problem=" << problem.name()
          << " T=" << horizon << ": " << check.describe() << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int cmd_sweep(const SweepGrid& grid, std::ostream& csv, std::ostream& err) {
  if (grid.nus.empty() || grid.learners.empty() || grid.horizons.empty() || grid.seeds.empty()) {
    err << "sweep: every grid axis needs at least one value\n";
    return kExitUsage;
  }
  std::vector<SweepRow> rows;
  try {
    rows = run_sweep(grid);
  } catch (const ContractViolation& e) {
    err << "sweep: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitFailure;
  }
  write_sweep_csv(csv, rows);
  int status = kExitOk;
  for (const SweepRow& r : rows) {
    if (!r.bounds_ok || !r.iterates_ok) {
      err << "bound violation: learner=" << to_string(r.learner) << " nu=" << format_real(r.nu)
          << " T=" << r.horizon << " seed=" << r.seed << '\n';
      status = kExitFailure;
    }
  }
  return status;
}

int cmd_ratefit(const std::vector<std::filesystem::path>& inputs, std::ostream& out,
                std::ostream& err) {
  std::vector<json> summaries;
  try {
    for (const auto& path : inputs) {
      json j = read_json_file(path);
      if (j.is_array()) {
        for (auto& item : j) summaries.push_back(std::move(item));
      } else {
        summaries.push_back(std::move(j));
      }
    }
  } catch (const ConfigError& e) {
    err << "ratefit: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    out << to_json(fit_rate(summaries)).dump(2) << '\n';
  } catch (const InsufficientData& e) {
    err << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_check(const std::optional<std::string>& suite, const CheckOptions& options,
              std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (suite) {
    names.push_back(*suite);
  } else {
    for (auto n : suite_names()) names.emplace_back(n);
  }

  json report = json::array();
  int status = kExitOk;
  for (const auto& name : names) {
    SuiteResult r;
    try {
      r = run_suite(name, options);
    } catch (const ContractViolation& e) {
      err << "check: " << e.what() << '\n';
      return kExitUsage;
    }
    report.push_back(to_json(r));
    if (!r.pass) {
      err << "suite " << r.name << " failed (" << r.failures << '/' << r.samples
          << "); worst: " << r.worst_case << '\n';
      status = kExitFailure;
    }
  }
  out << json{{"suites", report}, {"pass", status == kExitOk}}.dump(2) << '\n';
  return status;
}

}  // namespace ngrad::bench
