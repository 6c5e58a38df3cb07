#include "ngrad/bench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "ngrad/bench/config.hpp"
#include "ngrad/bench/records.hpp"
#include "ngrad/errors.hpp"

namespace ngrad::bench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Separate streams for the minimizer and the start direction.
constexpr std::uint64_t kStartStream = 0x9e3779b97f4a7c15ULL;

}  // namespace

SweepGrid default_sweep_grid() {
  SweepGrid g;
  g.nus = {0.0, 0.5, 1.0};
  g.learners = {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT};
  for (std::size_t k = 8; k <= 14; ++k) g.horizons.push_back(std::size_t{1} << k);
  g.seeds = {0, 1, 2};
  return g;
}

Problem sweep_problem(double nu, std::size_t dimension, std::uint64_t seed) {
  ProblemRecord r;
  r.family = Family::PowerNorm;
  r.dimension = dimension;
  r.nu = nu;
  r.seed = seed;
  return make_problem(r);
}

LearnerConfig sweep_learner(const SweepGrid& grid, LearnerKind kind, const Problem& p,
                            std::size_t horizon, std::uint64_t seed) {
  LearnerRecord r;
  r.kind = kind;
  r.step_scale = grid.step_scale;
  r.wealth_init = grid.wealth_init;
  r.grad_bound_init = grid.grad_bound_init;
  r.start_distance = grid.start_distance;
  return make_learner(r, p, horizon, seed ^ kStartStream);
}

SweepRow run_cell(const SweepGrid& grid, double nu, LearnerKind kind, std::size_t horizon,
                  std::uint64_t seed) {
  const Problem p = sweep_problem(nu, grid.dimension, seed);
  const LearnerConfig cfg = sweep_learner(grid, kind, p, horizon, seed);
  const RunRecord run = kind == LearnerKind::AdaGradDa
                            ? run_adagrad_warmup(cfg, p, horizon)
                            : run_normalized(cfg, p, horizon, grid.eps_zero);
  const BoundReport report = bound_report(run, p, cfg);
  const BoundCheck check = check_bounds(report);

  SweepRow row;
  row.nu = nu;
  row.learner = kind;
  row.horizon = horizon;
  row.seed = seed;
  row.steps_taken = run.steps_taken;
  row.terminated_early = run.terminated_early;
  row.f_gap_avg = report.measured;
  row.psi_at_xstar = report.psi_at_xstar;
  row.bound_gm = report.theorem2_bound_gm.value_or(kNaN);
  row.bound_am = report.theorem2_bound_am.value_or(kNaN);
  row.bound_closed_form = report.closed_form_bound;
  for (const Vector& x : run.iterates) {
    const double r = distance(x, p.minimizer());
    row.max_dist_sq = std::max(row.max_dist_sq, r * r);
  }
  row.bounds_ok = check.ok();
  if (kind == LearnerKind::OgdConst) {
    const double d = distance(cfg.start, p.minimizer());
    row.iterate_bound = d * d + cfg.step_scale * cfg.step_scale;
    row.iterates_ok = row.max_dist_sq <= row.iterate_bound + 1e-9;
  } else {
    row.iterate_bound = kNaN;
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid) {
  struct Cell {
    double nu;
    LearnerKind kind;
    std::size_t horizon;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (double nu : grid.nus) {
    for (LearnerKind kind : grid.learners) {
      for (std::size_t t : grid.horizons) {
        for (std::uint64_t seed : grid.seeds) cells.push_back({nu, kind, t, seed});
      }
    }
  }
  if (cells.empty()) throw ContractViolation("run_sweep: empty grid");

  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const Cell& c = cells[i];
        rows[i] = run_cell(grid, c.nu, c.kind, c.horizon, c.seed);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = grid.threads != 0 ? grid.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(cells.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "nu,learner,T,seed,steps_taken,terminated_early,f_gap_avg,psi_at_xstar,bound_gm,"
         "bound_am,bound_closed_form,max_dist_sq,iterate_bound,bounds_ok,iterates_ok\n";
  for (const SweepRow& r : rows) {
    out << format_real(r.nu) << ',' << to_string(r.learner) << ',' << r.horizon << ',' << r.seed
        << ',' << r.steps_taken << ',' << (r.terminated_early ? 1 : 0) << ','
        << format_real(r.f_gap_avg) << ',' << format_real(r.psi_at_xstar) << ','
        << format_real(r.bound_gm) << ',' << format_real(r.bound_am) << ','
        << format_real(r.bound_closed_form) << ',' << format_real(r.max_dist_sq) << ','
        << format_real(r.iterate_bound) << ',' << (r.bounds_ok ? 1 : 0) << ','
        << (r.iterates_ok ? 1 : 0) << '\n';
  }
}

}  // namespace ngrad::bench
