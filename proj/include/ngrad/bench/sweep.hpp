#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "ngrad/learner.hpp"
#include "ngrad/problem.hpp"
#include "ngrad/reduction.hpp"

namespace ngrad::bench {

/// Grid of PowerNorm exponents x learners x horizons x seeds.
struct SweepGrid {
  std::vector<double> nus;
  std::vector<LearnerKind> learners;
  std::vector<std::size_t> horizons;
  std::vector<std::uint64_t> seeds;
  std::size_t dimension = 10;
  double start_distance = 1.0;
  double step_scale = 1.0;
  double wealth_init = 1.0;
  double grad_bound_init = 1.0;
  double eps_zero = kDefaultEpsZero;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// nu in {0, 0.5, 1}, {ogd_const, da_sqrt, kt}, T in {2^8..2^14}, seeds {0, 1, 2}, d = 10.
SweepGrid default_sweep_grid();

struct SweepRow {
  double nu = 0.0;
  LearnerKind learner = LearnerKind::OgdConst;
  std::size_t horizon = 0;
  std::uint64_t seed = 0;
  std::size_t steps_taken = 0;
  bool terminated_early = false;
  double f_gap_avg = 0.0;
  double psi_at_xstar = 0.0;
  double bound_gm = 0.0;  // NaN for adagrad_da
  double bound_am = 0.0;  // NaN for adagrad_da
  double bound_closed_form = 0.0;
  double max_dist_sq = 0.0;
  /// ||x_1 - x*||^2 + step_scale^2 for ogd_const, NaN otherwise.
  double iterate_bound = 0.0;
  bool bounds_ok = true;
  bool iterates_ok = true;
};

/// PowerNorm(nu) in dimension d with minimizer uniform in [-1, 1]^d from `seed`.
Problem sweep_problem(double nu, std::size_t dimension, std::uint64_t seed);
/// Learner starting at distance grid.start_distance from x* in a seeded direction.
LearnerConfig sweep_learner(const SweepGrid& grid, LearnerKind kind, const Problem& p,
                            std::size_t horizon, std::uint64_t seed);

/// Runs one cell; exposed so tests can reproduce single rows.
SweepRow run_cell(const SweepGrid& grid, double nu, LearnerKind kind, std::size_t horizon,
                  std::uint64_t seed);

/// Rows come back in grid order (nu, learner, horizon, seed) however many
/// threads ran them.
std::vector<SweepRow> run_sweep(const SweepGrid& grid);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace ngrad::bench
