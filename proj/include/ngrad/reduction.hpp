#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ngrad/learner.hpp"
#include "ngrad/problem.hpp"
#include "ngrad/vector.hpp"

namespace ngrad {

inline constexpr double kDefaultEpsZero = 1e-12;

enum class Averaging { InverseGradNorm, Uniform };

/// Trajectory of one driver run. Only loss-fed rounds are recorded; a round
/// that stops on a vanishing gradient shows up in `stop_index` instead.
struct RunRecord {
  std::vector<Vector> iterates;
  std::vector<double> grad_norms;
  std::vector<double> suboptimalities;
  Vector average_point;
  double average_suboptimality = 0.0;
  bool terminated_early = false;
  /// 1-based round at which ||g_t|| <= eps_zero, when terminated_early.
  std::optional<std::size_t> stop_index;
  /// Number of loss-fed rounds (== iterates.size()).
  std::size_t steps_taken = 0;
  /// Requested horizon T.
  std::size_t horizon = 0;
  Averaging averaging = Averaging::InverseGradNorm;
  /// AdaGrad warm-up only: some realized ||g_t|| exceeded the configured G.
  bool grad_bound_exceeded = false;
  /// Sum of ||g_t||^2 over the run (used by the AdaGradDa bound).
  double squared_norm_sum = 0.0;

  /// Online-to-batch weight of round t (0-based): 1/||g_t|| or 1.
  double weight(std::size_t t) const;
};

/// Runs the normalized-gradient reduction: query x_t, stop when
/// ||g_t|| <= eps_zero, otherwise feed g_t/||g_t|| to the learner. Returns the
/// 1/||g_t||-weighted average of the iterates (or x_t on early stop).
/// Throws WrongDriver for AdaGradDa and NumericalFailure on non-finite gradients.
RunRecord run_normalized(const LearnerConfig& cfg, const Problem& p, std::size_t horizon,
                         double eps_zero = kDefaultEpsZero);

/// AdaGrad-norm dual averaging fed raw gradients for T rounds; uniform average.
RunRecord run_adagrad_warmup(const LearnerConfig& cfg, const Problem& p, std::size_t horizon);

struct Means {
  double harmonic = 0.0;
  double geometric = 0.0;
  double arithmetic = 0.0;
};

/// Harmonic, geometric (via mean of logs) and arithmetic means of positive values.
Means hm_gm_am(std::span<const double> values);

/// alpha^nu (psi / T)^{1+nu} M, where M is the geometric (use_gm) or
/// arithmetic mean of the local constants.
double theorem2_bound(double psi_at_xstar, std::size_t horizon, const HolderSpec& spec,
                      std::span<const double> local_constants, bool use_gm);

/// Deterministic upper bound on f(x_bar_T) - f* for the given learner on p.
/// At nu = 0 the smoothness constant is replaced by the gradient bound G of p.
double closed_form_rate(LearnerKind kind, const Problem& p, const LearnerConfig& cfg,
                        std::size_t horizon);

struct BoundReport {
  double psi_at_xstar = 0.0;
  /// Absent for AdaGrad warm-up runs, which are not normalized reductions.
  std::optional<double> theorem2_bound_gm;
  std::optional<double> theorem2_bound_am;
  double closed_form_bound = 0.0;
  double measured = 0.0;
  /// L(x_t) for each recorded iterate; nullopt where f(x_t) = f*.
  std::vector<std::optional<double>> local_constants;
};

BoundReport bound_report(const RunRecord& run, const Problem& p, const LearnerConfig& cfg);

}  // namespace ngrad
