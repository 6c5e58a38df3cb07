#include "ngrad/bench/config.hpp"

#include <algorithm>
#include <cmath>

#include "ngrad/errors.hpp"

namespace ngrad::bench {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T required(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

std::optional<std::vector<double>> optional_coords(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<std::vector<double>>(j, key, {});
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
}

}  // namespace

Vector random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(dim);
  double norm = 0.0;
  while (norm == 0.0) {
    for (double& c : v) c = normal(rng);
    norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
  }
  for (double& c : v) c /= norm;
  return Vector(std::move(v));
}

ProblemRecord parse_problem(const json& j) {
  require_object(j, "problem");
  ProblemRecord r;
  try {
    r.family = family_from_string(required<std::string>(j, "family"));
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  }
  r.dimension = required<std::size_t>(j, "dimension");
  if (r.dimension < 1) throw ConfigError("problem.dimension must be at least 1");
  r.minimizer = optional_coords(j, "minimizer");
  if (r.minimizer && r.minimizer->size() != r.dimension) {
    throw ConfigError("problem.minimizer length does not match dimension");
  }
  const json params = j.contains("parameters") ? j.at("parameters") : json::object();
  require_object(params, "problem.parameters");
  r.nu = field<double>(params, "nu", 1.0);
  r.delta = field<double>(params, "delta", 1.0);
  r.seed = field<std::uint64_t>(j, "seed", 0);
  return r;
}

LearnerRecord parse_learner(const json& j) {
  require_object(j, "learner");
  LearnerRecord r;
  try {
    r.kind = learner_kind_from_string(required<std::string>(j, "kind"));
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  }
  r.step_scale = field<double>(j, "step_scale", 1.0);
  if (j.contains("horizon") && !j.at("horizon").is_null()) {
    r.horizon = field<std::size_t>(j, "horizon", 1);
  }
  r.wealth_init = field<double>(j, "wealth_init", 1.0);
  r.grad_bound_init = field<double>(j, "grad_bound_init", 1.0);
  r.start = optional_coords(j, "start");
  r.start_distance = field<double>(j, "start_distance", 1.0);
  if (!(r.start_distance >= 0.0)) throw ConfigError("learner.start_distance must be nonnegative");
  return r;
}

ExperimentConfig parse_experiment(const json& j) {
  require_object(j, "config");
  ExperimentConfig c;
  c.problem = parse_problem(required<json>(j, "problem"));
  c.learner = parse_learner(required<json>(j, "learner"));
  c.horizons = required<std::vector<std::size_t>>(j, "horizons");
  if (c.horizons.empty()) throw ConfigError("horizons must not be empty");
  for (std::size_t i = 0; i < c.horizons.size(); ++i) {
    if (c.horizons[i] < 1) throw ConfigError("horizons must be positive");
    if (i > 0 && c.horizons[i] <= c.horizons[i - 1]) {
      throw ConfigError("horizons must be strictly increasing");
    }
  }
  if (c.learner.horizon && c.horizons != std::vector<std::size_t>{*c.learner.horizon}) {
    throw ConfigError("learner.horizon is set; horizons must then be exactly [horizon]");
  }
  c.seed = field<std::uint64_t>(j, "seed", 0);
  c.eps_zero = field<double>(j, "eps_zero", kDefaultEpsZero);
  if (!(c.eps_zero > 0.0)) throw ConfigError("eps_zero must be positive");
  if (j.contains("output")) {
    const json& out = j.at("output");
    require_object(out, "output");
    c.trajectory_prefix = field<std::string>(out, "trajectory_prefix", c.trajectory_prefix);
    c.summary_prefix = field<std::string>(out, "summary_prefix", c.summary_prefix);
  }

  // Surface parameter errors as config errors rather than at run time.
  try {
    const Problem p = make_problem(c.problem);
    make_learner(c.learner, p, c.horizons.front(), c.seed).validate();
  } catch (const ContractViolation& e) {
    throw ConfigError(e.what());
  }
  return c;
}

json to_json(const ProblemRecord& r) {
  json j{{"family", std::string(to_string(r.family))},
         {"dimension", r.dimension},
         {"parameters", {{"nu", r.nu}, {"delta", r.delta}}},
         {"seed", r.seed}};
  if (r.minimizer) j["minimizer"] = *r.minimizer;
  return j;
}

json to_json(const LearnerRecord& r) {
  json j{{"kind", std::string(to_string(r.kind))},
         {"step_scale", r.step_scale},
         {"wealth_init", r.wealth_init},
         {"grad_bound_init", r.grad_bound_init},
         {"start_distance", r.start_distance}};
  if (r.horizon) j["horizon"] = *r.horizon;
  if (r.start) j["start"] = *r.start;
  return j;
}

json to_json(const ExperimentConfig& c) {
  return json{{"problem", to_json(c.problem)},
              {"learner", to_json(c.learner)},
              {"horizons", c.horizons},
              {"seed", c.seed},
              {"eps_zero", c.eps_zero}};
}

Problem make_problem(const ProblemRecord& r) {
  Vector minimizer = [&] {
    if (r.minimizer) return Vector(*r.minimizer);
    std::mt19937_64 rng(r.seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    std::vector<double> x(r.dimension);
    for (double& v : x) v = coord(rng);
    return Vector(std::move(x));
  }();
  switch (r.family) {
    case Family::Quadratic: return Problem::quadratic(std::move(minimizer));
    case Family::PowerNorm: return Problem::power_norm(std::move(minimizer), r.nu);
    case Family::L2Norm: return Problem::l2_norm(std::move(minimizer));
    case Family::Huber: return Problem::huber(std::move(minimizer), r.delta);
    case Family::LogSumExp: return Problem::log_sum_exp(std::move(minimizer));
  }
  throw ConfigError("unreachable problem family");
}

LearnerConfig make_learner(const LearnerRecord& r, const Problem& p, std::size_t horizon,
                           std::uint64_t seed) {
  LearnerConfig cfg;
  cfg.kind = r.kind;
  cfg.step_scale = r.step_scale;
  cfg.horizon = r.horizon.value_or(horizon);
  cfg.wealth_init = r.wealth_init;
  cfg.grad_bound_init = r.grad_bound_init;
  if (r.start) {
    if (r.start->size() != p.dimension()) {
      throw ConfigError("learner.start length does not match problem dimension");
    }
    cfg.start = Vector(*r.start);
  } else {
    std::mt19937_64 rng(seed);
    cfg.start = axpy(r.start_distance, random_unit_vector(p.dimension(), rng), p.minimizer());
  }
  return cfg;
}

}  // namespace ngrad::bench
