#include "ngrad/reduction.hpp"

#include <cmath>
#include <string>

#include "ngrad/errors.hpp"

namespace ngrad {

namespace {

Vector query_grad(const Problem& p, const Vector& x, std::size_t step) {
  try {
    return p.grad(x);
  } catch (const NumericalFailure& e) {
    throw NumericalFailure(std::string("non-finite gradient (") + e.what() + ")", step);
  }
}

}  // namespace

double RunRecord::weight(std::size_t t) const {
  return averaging == Averaging::Uniform ? 1.0 : 1.0 / grad_norms.at(t);
}

RunRecord run_normalized(const LearnerConfig& cfg, const Problem& p, std::size_t horizon,
                         double eps_zero) {
  if (!is_unit_norm(cfg.kind)) {
    throw WrongDriver("run_normalized: " + std::string(to_string(cfg.kind)) +
                      " takes raw gradients; use run_adagrad_warmup");
  }
  if (!(eps_zero > 0.0)) throw ContractViolation("run_normalized: eps_zero must be positive");
  if (horizon < 1) throw ContractViolation("run_normalized: T must be at least 1");
  if (cfg.start.size() != p.dimension()) {
    throw ContractViolation("run_normalized: start dimension does not match the problem");
  }

  RunRecord run;
  run.horizon = horizon;
  run.averaging = Averaging::InverseGradNorm;
  LearnerState learner(cfg);
  WeightedMeanAccumulator average(p.dimension());

  for (std::size_t t = 1; t <= horizon; ++t) {
    Vector x = learner.next_point();
    const Vector g = query_grad(p, x, t);
    const double norm = l2_norm(g);
    if (norm <= eps_zero) {
      run.terminated_early = true;
      run.stop_index = t;
      run.average_point = std::move(x);
      break;
    }
    average.push(x, 1.0 / norm);
    run.grad_norms.push_back(norm);
    run.suboptimalities.push_back(p.eval(x) - p.optimum());
    run.squared_norm_sum += norm * norm;
    run.iterates.push_back(std::move(x));
    learner = learner.observe(scale(1.0 / norm, g));
  }

  run.steps_taken = run.iterates.size();
  if (!run.terminated_early) run.average_point = average.finalize();
  run.average_suboptimality = p.eval(run.average_point) - p.optimum();
  return run;
}

RunRecord run_adagrad_warmup(const LearnerConfig& cfg, const Problem& p, std::size_t horizon) {
  if (cfg.kind != LearnerKind::AdaGradDa) {
    throw WrongDriver("run_adagrad_warmup: needs adagrad_da, got " +
                      std::string(to_string(cfg.kind)));
  }
  if (horizon < 1) throw ContractViolation("run_adagrad_warmup: T must be at least 1");
  if (cfg.start.size() != p.dimension()) {
    throw ContractViolation("run_adagrad_warmup: start dimension does not match the problem");
  }

  RunRecord run;
  run.horizon = horizon;
  run.averaging = Averaging::Uniform;
  LearnerState learner(cfg);
  WeightedMeanAccumulator average(p.dimension());

  for (std::size_t t = 1; t <= horizon; ++t) {
    Vector x = learner.next_point();
    const Vector g = query_grad(p, x, t);
    const double norm = l2_norm(g);
    if (norm > cfg.grad_bound_init + kUnitNormTolerance) run.grad_bound_exceeded = true;
    average.push(x, 1.0);
    run.grad_norms.push_back(norm);
    run.suboptimalities.push_back(p.eval(x) - p.optimum());
    run.squared_norm_sum += norm * norm;
    run.iterates.push_back(std::move(x));
    learner = learner.observe_unchecked(g);
  }

  run.steps_taken = run.iterates.size();
  run.average_point = average.finalize();
  run.average_suboptimality = p.eval(run.average_point) - p.optimum();
  return run;
}

}  // namespace ngrad
