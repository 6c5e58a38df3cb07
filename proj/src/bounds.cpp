#include <algorithm>
#include <cmath>
#include <string>

#include "ngrad/errors.hpp"
#include "ngrad/holder_checks.hpp"
#include "ngrad/reduction.hpp"

namespace ngrad {

Means hm_gm_am(std::span<const double> values) {
  if (values.empty()) throw ContractViolation("hm_gm_am: empty input");
  double inv_sum = 0.0;
  double log_sum = 0.0;
  double sum = 0.0;
  for (double a : values) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw ContractViolation("hm_gm_am: values must be positive and finite");
    }
    inv_sum += 1.0 / a;
    log_sum += std::log(a);
    sum += a;
  }
  const auto n = static_cast<double>(values.size());
  return {n / inv_sum, std::exp(log_sum / n), sum / n};
}

double theorem2_bound(double psi_at_xstar, std::size_t horizon, const HolderSpec& spec,
                      std::span<const double> local_constants, bool use_gm) {
  if (!(psi_at_xstar >= 0.0)) throw ContractViolation("theorem2_bound: psi must be nonnegative");
  if (horizon < 1) throw ContractViolation("theorem2_bound: T must be at least 1");
  if (local_constants.size() > horizon) {
    throw ContractViolation("theorem2_bound: more local constants than rounds");
  }
  const Means m = hm_gm_am(local_constants);
  const double mean = use_gm ? m.geometric : m.arithmetic;
  const double per_round = psi_at_xstar / static_cast<double>(horizon);
  return spec.alpha_pow_nu() * std::pow(per_round, 1.0 + spec.nu) * mean;
}

double closed_form_rate(LearnerKind kind, const Problem& p, const LearnerConfig& cfg,
                        std::size_t horizon) {
  if (cfg.kind != kind) {
    throw ContractViolation("closed_form_rate: config is for " + std::string(to_string(cfg.kind)) +
                            ", asked for " + std::string(to_string(kind)));
  }
  if (horizon < 1) throw ContractViolation("closed_form_rate: T must be at least 1");
  if (kind == LearnerKind::OgdConst && horizon != cfg.horizon) {
    throw ContractViolation("closed_form_rate: ogd_const horizon mismatch");
  }
  const HolderSpec& s = p.spec();
  double constant = s.l_nu * s.corollary_factor();
  if (s.nu == 0.0) {
    // The nu = 0 argument only uses ||g_t|| <= G.
    if (!std::isfinite(p.gradient_bound())) {
      throw ContractViolation("closed_form_rate: nu = 0 needs a finite gradient bound");
    }
    constant = p.gradient_bound();
  }
  const double d = distance(cfg.start, p.minimizer());
  const double a = cfg.step_scale;
  const double t = static_cast<double>(horizon);
  const double root_t = std::sqrt(t);
  const double power = 1.0 + s.nu;

  switch (kind) {
    case LearnerKind::OgdConst:
      return constant * std::pow((d * d / a + a) / (2.0 * root_t), power);
    case LearnerKind::DaSqrt:
      return constant * std::pow((d * d / (2.0 * a) + a) / root_t, power);
    case LearnerKind::KT: {
      const double d0 = cfg.wealth_init;
      const double log_term = std::log(24.0 * t * t * d * d / (d0 * d0) + 1.0);
      return constant * std::pow(d / root_t * std::sqrt(log_term) + d0 / t, power);
    }
    case LearnerKind::AdaGradDa: {
      const double twice = d * d / a + 2.0 * a;
      const double smooth_branch =
          constant * std::pow(twice, power) * std::pow(t, (1.0 - s.nu) / 2.0) / t;
      const double lipschitz_branch = cfg.grad_bound_init / t * twice;
      return std::max(smooth_branch, lipschitz_branch);
    }
  }
  return 0.0;
}

BoundReport bound_report(const RunRecord& run, const Problem& p, const LearnerConfig& cfg) {
  BoundReport report;
  const double d = distance(cfg.start, p.minimizer());
  const std::size_t horizon = cfg.kind == LearnerKind::OgdConst ? cfg.horizon : run.horizon;

  report.psi_at_xstar = cfg.kind == LearnerKind::AdaGradDa
                            ? regret_bound(cfg, d, horizon, run.squared_norm_sum)
                            : regret_bound(cfg, d, horizon);
  report.closed_form_bound = closed_form_rate(cfg.kind, p, cfg, horizon);
  report.measured = run.average_suboptimality;

  std::vector<double> retained;
  report.local_constants.reserve(run.iterates.size());
  for (std::size_t t = 0; t < run.iterates.size(); ++t) {
    if (run.suboptimalities[t] > 0.0) {
      const double l = local_holder_constant(p, run.iterates[t]);
      report.local_constants.emplace_back(l);
      if (l > 0.0) retained.push_back(l);
    } else {
      report.local_constants.emplace_back(std::nullopt);
    }
  }

  if (is_unit_norm(cfg.kind)) {
    if (retained.empty()) {
      report.theorem2_bound_gm = 0.0;
      report.theorem2_bound_am = 0.0;
    } else {
      report.theorem2_bound_gm =
          theorem2_bound(report.psi_at_xstar, run.steps_taken, p.spec(), retained, true);
      report.theorem2_bound_am =
          theorem2_bound(report.psi_at_xstar, run.steps_taken, p.spec(), retained, false);
    }
  }
  return report;
}

}  // namespace ngrad
