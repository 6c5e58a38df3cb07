#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ngrad/learner.hpp"
#include "ngrad/problem.hpp"
#include "ngrad/reduction.hpp"

namespace ngrad::bench {

/// Malformed or inconsistent experiment configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {family, dimension, minimizer?, parameters: {nu?, delta?}, seed}
struct ProblemRecord {
  Family family = Family::Quadratic;
  std::size_t dimension = 1;
  /// Drawn uniformly from [-1, 1]^d with `seed` when absent.
  std::optional<std::vector<double>> minimizer;
  double nu = 1.0;     // power_norm
  double delta = 1.0;  // huber
  std::uint64_t seed = 0;
};

/// {kind, step_scale?, horizon?, wealth_init?, grad_bound_init?, start? | start_distance?}
struct LearnerRecord {
  LearnerKind kind = LearnerKind::OgdConst;
  double step_scale = 1.0;
  /// OgdConst only. When absent each run uses its own horizon.
  std::optional<std::size_t> horizon;
  double wealth_init = 1.0;
  double grad_bound_init = 1.0;
  std::optional<std::vector<double>> start;
  /// Used when `start` is absent: x_1 = x* + start_distance * (random unit vector).
  double start_distance = 1.0;
};

struct ExperimentConfig {
  ProblemRecord problem;
  LearnerRecord learner;
  std::vector<std::size_t> horizons;
  std::uint64_t seed = 0;
  double eps_zero = kDefaultEpsZero;
  std::string trajectory_prefix = "trajectory";
  std::string summary_prefix = "summary";
};

ProblemRecord parse_problem(const nlohmann::json& j);
LearnerRecord parse_learner(const nlohmann::json& j);
/// Throws ConfigError on any schema or invariant violation.
ExperimentConfig parse_experiment(const nlohmann::json& j);

nlohmann::json to_json(const ProblemRecord& r);
nlohmann::json to_json(const LearnerRecord& r);
nlohmann::json to_json(const ExperimentConfig& c);

Problem make_problem(const ProblemRecord& r);
/// Resolves the start point and horizon of `r` for one run of length `horizon`.
LearnerConfig make_learner(const LearnerRecord& r, const Problem& p, std::size_t horizon,
                           std::uint64_t seed);

/// Uniformly distributed direction on the unit sphere.
Vector random_unit_vector(std::size_t dim, std::mt19937_64& rng);

}  // namespace ngrad::bench
