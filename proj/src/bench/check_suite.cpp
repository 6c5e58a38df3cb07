#include "ngrad/bench/check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "ngrad/bench/config.hpp"
#include "ngrad/bench/records.hpp"
#include "ngrad/errors.hpp"
#include "ngrad/holder_checks.hpp"
#include "ngrad/learner.hpp"
#include "ngrad/reduction.hpp"

namespace ngrad::bench {

namespace {

constexpr double kFiniteDiffStep = 1e-6;
constexpr double kFiniteDiffTolerance = 1e-5;
constexpr double kNonsmoothExclusion = 1e-3;
constexpr double kConstantTolerance = 1e-9;
constexpr double kLemmaTolerance = 1e-12;
constexpr double kRegretTolerance = 1e-6;

class Tracker {
 public:
  explicit Tracker(std::string name) { result_.name = std::move(name); }

  /// `describe` is only evaluated for a new worst case.
  void record(double margin, const std::function<std::string()>& describe) {
    ++result_.samples;
    if (margin > 0.0 || std::isnan(margin)) ++result_.failures;
    if (margin > result_.worst_margin || std::isnan(margin)) {
      result_.worst_margin = margin;
      result_.worst_case = describe();
    }
  }

  SuiteResult finish(std::string note = {}) {
    result_.pass = result_.failures == 0 && result_.samples > 0;
    result_.note = std::move(note);
    return std::move(result_);
  }

 private:
  SuiteResult result_;
};

std::string at_point(const Problem& p, const Vector& x) {
  std::string s = p.name() + " at [";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + format_real(x[i]);
  return s + "]";
}

std::mt19937_64 suite_rng(const CheckOptions& o, std::uint64_t salt) {
  std::seed_seq seq{o.seed, salt};
  return std::mt19937_64(seq);
}

double relative_margin(double lhs, double rhs, double tolerance) {
  return lhs - rhs - tolerance * std::abs(rhs);
}

std::vector<std::size_t> check_horizons() {
  std::vector<std::size_t> out;
  for (std::size_t k = 4; k <= 12; ++k) out.push_back(std::size_t{1} << k);
  return out;
}

SuiteResult gradient_suite(const CheckOptions& o) {
  Tracker tr("gradient");
  auto rng = suite_rng(o, 1);
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    for (std::size_t k = 0; k < o.samples; ++k) {
      Vector x = sample_point(p.dimension(), rng, o.radius);
      while (p.distance_to_nonsmooth(x) < kNonsmoothExclusion) {
        x = sample_point(p.dimension(), rng, o.radius);
      }
      const Vector g = p.grad(x);
      const Vector fd = finite_diff_grad(p, x, kFiniteDiffStep);
      const double err = distance(fd, g);
      tr.record(err - kFiniteDiffTolerance * l2_norm(g), [&] { return at_point(p, x); });
    }
  }
  return tr.finish();
}

SuiteResult grad_bound_suite(const CheckOptions& o) {
  Tracker tr("grad_bound");
  auto rng = suite_rng(o, 3);
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    if (p.spec().nu == 0.0) continue;
    for (std::size_t k = 0; k < o.samples; ++k) {
      const Vector x = sample_point(p.dimension(), rng, o.radius);
      const CheckOutcome c = check_grad_bound(p, x);
      tr.record(c.residual - c.slack, [&] { return at_point(p, x); });
    }
  }
  return tr.finish("nu = 0 families are outside the corollary and skipped");
}

SuiteResult holder_constant_suite(const CheckOptions& o) {
  Tracker tr("holder_constant");
  constexpr std::size_t kSeeds = 10;
  const std::size_t pairs = std::max<std::size_t>(1, o.samples / kSeeds);
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    for (std::size_t s = 0; s < kSeeds; ++s) {
      const std::uint64_t seed = o.seed * 1000 + s;
      const double sampled = sample_holder_constant(p, pairs, seed, o.radius);
      tr.record(sampled - p.spec().l_nu - kConstantTolerance, [&] {
        return p.name() + " seed " + std::to_string(seed) + ": sampled " + format_real(sampled) +
               " vs declared " + format_real(p.spec().l_nu);
      });
    }
  }
  return tr.finish();
}

SuiteResult local_constant_suite(const CheckOptions& o) {
  Tracker tr("local_constant");
  auto rng = suite_rng(o, 5);
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    for (std::size_t k = 0; k < o.samples; ++k) {
      const Vector x = sample_point(p.dimension(), rng, o.radius);
      if (!(p.eval(x) > p.optimum())) continue;
      const double l = local_holder_constant(p, x);
      tr.record(l - p.spec().l_nu - kConstantTolerance, [&] { return at_point(p, x); });
    }
  }
  return tr.finish();
}

SuiteResult convexity_suite(const CheckOptions& o) {
  Tracker tr("convexity");
  auto rng = suite_rng(o, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t segments = std::max<std::size_t>(1, o.samples / 10);
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    for (std::size_t k = 0; k < segments; ++k) {
      const Vector x = sample_point(p.dimension(), rng, o.radius);
      const Vector y = sample_point(p.dimension(), rng, o.radius);
      const double lambda = unit(rng);
      const Vector mid = axpy(lambda, difference(x, y), y);
      const double chord = lambda * p.eval(x) + (1.0 - lambda) * p.eval(y);
      tr.record(p.eval(mid) - chord - 1e-9, [&] { return at_point(p, mid); });
    }
  }
  return tr.finish();
}

SuiteResult lemma1_suite(const CheckOptions& o) {
  Tracker tr("lemma1");
  auto rng = suite_rng(o, 7);
  std::uniform_int_distribution<std::size_t> length(1, 64);
  std::uniform_real_distribution<double> log_value(std::log(1e-6), std::log(1e6));
  for (std::size_t k = 0; k < o.samples; ++k) {
    std::vector<double> a(length(rng));
    for (double& v : a) v = std::exp(log_value(rng));
    const Means m = hm_gm_am(a);
    const double margin = std::max(relative_margin(m.harmonic, m.geometric, kLemmaTolerance),
                                   relative_margin(m.geometric, m.arithmetic, kLemmaTolerance));
    tr.record(margin, [&] { return "sequence " + std::to_string(k) + " of length " +
                                   std::to_string(a.size()); });
  }
  return tr.finish();
}

// Unit-loss streams: constant direction, alternating sign, or i.i.d. random
// directions. Compares measured regret with psi at every prefix where the
// bound applies, and checks the OgdConst distance bound whenever the prefix
// regret against u is nonnegative.
SuiteResult regret_suite(const CheckOptions& o) {
  Tracker tr("regret");
  auto rng = suite_rng(o, 8);
  constexpr std::size_t kStreams = 100;
  const std::size_t streams = std::min(kStreams, std::max<std::size_t>(1, o.samples));
  std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
  std::uniform_int_distribution<std::size_t> horizon_dist(1, 512);
  std::uniform_real_distribution<double> offset_dist(0.0, 10.0);
  std::uniform_real_distribution<double> scale_dist(0.25, 4.0);

  for (LearnerKind kind : {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT}) {
    for (std::size_t s = 0; s < streams; ++s) {
      const std::size_t dim = dim_dist(rng);
      const std::size_t horizon = horizon_dist(rng);
      LearnerConfig cfg;
      cfg.kind = kind;
      cfg.step_scale = scale_dist(rng);
      cfg.wealth_init = scale_dist(rng);
      cfg.horizon = horizon;
      cfg.start = sample_point(dim, rng, 5.0);

      const Vector fixed = random_unit_vector(dim, rng);
      std::vector<Vector> comparators{cfg.start};
      comparators.push_back(axpy(offset_dist(rng), random_unit_vector(dim, rng), cfg.start));
      comparators.push_back(axpy(-offset_dist(rng), fixed, cfg.start));

      std::vector<double> regret(comparators.size(), 0.0);
      LearnerState learner(cfg);
      for (std::size_t t = 1; t <= horizon; ++t) {
        const Vector x = learner.next_point();
        Vector q = fixed;
        if (s % 3 == 1) q = scale(t % 2 == 0 ? -1.0 : 1.0, fixed);
        if (s % 3 == 2) q = random_unit_vector(dim, rng);
        learner = learner.observe(q);
        const Vector x_next = learner.next_point();
        for (std::size_t c = 0; c < comparators.size(); ++c) {
          const Vector& u = comparators[c];
          regret[c] += dot(q, difference(x, u));
          const double dist = distance(u, cfg.start);
          auto where = [&] {
            return std::string(to_string(kind)) + " stream " + std::to_string(s) + " t=" +
                   std::to_string(t) + " comparator " + std::to_string(c);
          };
          if (kind != LearnerKind::OgdConst || t == horizon) {
            const double psi = regret_bound(cfg, dist, kind == LearnerKind::OgdConst ? horizon : t);
            tr.record(regret[c] - psi - kRegretTolerance, where);
          }
          if (kind == LearnerKind::OgdConst && regret[c] >= 0.0) {
            const double r = distance(x_next, u);
            tr.record(r * r - dist * dist - cfg.step_scale * cfg.step_scale - 1e-9, where);
          }
        }
      }
    }
  }
  return tr.finish("OgdConst distance bound is checked at prefixes with nonnegative regret");
}

struct ReductionCase {
  Problem problem;
  LearnerConfig config;
  std::size_t horizon;
};

std::vector<ReductionCase> reduction_cases(const CheckOptions& o,
                                           std::initializer_list<LearnerKind> kinds) {
  std::vector<ReductionCase> out;
  std::uint64_t direction_seed = o.seed;
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    for (LearnerKind kind : kinds) {
      for (std::size_t horizon : check_horizons()) {
        for (double start_distance : {1.0, 5.0}) {
          LearnerRecord r;
          r.kind = kind;
          r.start_distance = start_distance;
          out.push_back({p, make_learner(r, p, horizon, ++direction_seed), horizon});
        }
      }
    }
  }
  return out;
}

SuiteResult bounded_iterates_suite(const CheckOptions& o) {
  Tracker tr("bounded_iterates");
  for (const ReductionCase& c : reduction_cases(o, {LearnerKind::OgdConst})) {
    const RunRecord run = run_normalized(c.config, c.problem, c.horizon);
    const double d = distance(c.config.start, c.problem.minimizer());
    double worst = 0.0;
    for (const Vector& x : run.iterates) {
      const double r = distance(x, c.problem.minimizer());
      worst = std::max(worst, r * r);
    }
    const double a = c.config.step_scale;
    tr.record(worst - d * d - a * a - 1e-9, [&] {
      return c.problem.name() + " T=" + std::to_string(c.horizon) + " D=" + format_real(d);
    });
  }
  return tr.finish();
}

SuiteResult theorem2_suite(const CheckOptions& o) {
  Tracker tr("theorem2");
  for (const ReductionCase& c :
       reduction_cases(o, {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT})) {
    const RunRecord run = run_normalized(c.config, c.problem, c.horizon);
    const BoundReport report = bound_report(run, c.problem, c.config);
    auto where = [&] {
      return c.problem.name() + " " + std::string(to_string(c.config.kind)) +
             " T=" + std::to_string(c.horizon) +
             " D=" + format_real(distance(c.config.start, c.problem.minimizer()));
    };

    double weighted_gap = 0.0;
    double weight_sum = 0.0;
    for (std::size_t t = 0; t < run.steps_taken; ++t) {
      weighted_gap += run.suboptimalities[t] / run.grad_norms[t];
      weight_sum += 1.0 / run.grad_norms[t];
    }
    double margin = relative_margin(report.measured, report.closed_form_bound, kBoundSlack);
    margin = std::max(margin, relative_margin(report.measured, *report.theorem2_bound_gm, kBoundSlack));
    margin = std::max(margin, relative_margin(*report.theorem2_bound_gm, *report.theorem2_bound_am,
                                              kBoundSlack));
    margin = std::max(margin, weighted_gap - report.psi_at_xstar - kRegretTolerance);
    if (run.terminated_early) {
      margin = std::max(margin, l2_norm(c.problem.grad(run.average_point)) - kDefaultEpsZero);
    } else {
      margin = std::max(margin, report.measured - weighted_gap / weight_sum - 1e-9);
    }
    tr.record(margin, where);
  }
  return tr.finish();
}

SuiteResult negative_control_suite(const CheckOptions& o) {
  std::vector<Problem> corrupted;
  for (const Problem& p : shipped_problems(o.dimension, o.seed)) {
    corrupted.push_back(p.with_declared_constant(0.5 * p.spec().l_nu));
  }
  const SuiteResult inner = run_descent_suite(corrupted, o);
  SuiteResult out;
  out.name = "negative_control";
  out.samples = inner.samples;
  out.failures = inner.failures;
  out.worst_margin = inner.worst_margin;
  out.worst_case = inner.worst_case;
  out.pass = inner.failures > 0;
  out.note = "descent suite with halved constants; passes when it detects violations";
  return out;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "gradient", "descent",  "grad_bound",       "holder_constant", "local_constant",  "convexity",
      "lemma1",   "regret",   "bounded_iterates", "theorem2",        "negative_control"};
  return names;
}

std::vector<Problem> shipped_problems(std::size_t dimension, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto minimizer = [&] { return sample_point(dimension, rng, 1.0); };
  std::vector<Problem> out;
  out.push_back(Problem::quadratic(minimizer()));
  out.push_back(Problem::power_norm(minimizer(), 0.0));
  out.push_back(Problem::power_norm(minimizer(), 0.25));
  out.push_back(Problem::power_norm(minimizer(), 0.5));
  out.push_back(Problem::power_norm(minimizer(), 0.75));
  out.push_back(Problem::l2_norm(minimizer()));
  out.push_back(Problem::huber(minimizer(), 1.0));
  out.push_back(Problem::huber(minimizer(), 5.0));
  out.push_back(Problem::log_sum_exp(minimizer()));
  return out;
}

SuiteResult run_descent_suite(const std::vector<Problem>& problems, const CheckOptions& o) {
  Tracker tr("descent");
  auto rng = suite_rng(o, 2);
  for (const Problem& p : problems) {
    for (std::size_t k = 0; k < o.samples; ++k) {
      const Vector x = sample_point(p.dimension(), rng, o.radius);
      const Vector y = sample_point(p.dimension(), rng, o.radius);
      const CheckOutcome c = check_descent_inequality(p, x, y);
      tr.record(c.residual - c.slack, [&] { return at_point(p, x) + " -> " + at_point(p, y); });
    }
  }
  return tr.finish();
}

SuiteResult run_suite(std::string_view name, const CheckOptions& o) {
  if (name == "gradient") return gradient_suite(o);
  if (name == "descent") return run_descent_suite(shipped_problems(o.dimension, o.seed), o);
  if (name == "grad_bound") return grad_bound_suite(o);
  if (name == "holder_constant") return holder_constant_suite(o);
  if (name == "local_constant") return local_constant_suite(o);
  if (name == "convexity") return convexity_suite(o);
  if (name == "lemma1") return lemma1_suite(o);
  if (name == "regret") return regret_suite(o);
  if (name == "bounded_iterates") return bounded_iterates_suite(o);
  if (name == "theorem2") return theorem2_suite(o);
  if (name == "negative_control") return negative_control_suite(o);
  throw ContractViolation("unknown suite '" + std::string(name) + "'");
}

nlohmann::json to_json(const SuiteResult& r) {
  nlohmann::json j{{"suite", r.name},
                   {"samples", r.samples},
                   {"failures", r.failures},
                   {"worst_slack", r.worst_margin},
                   {"worst_case", r.worst_case},
                   {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace ngrad::bench
