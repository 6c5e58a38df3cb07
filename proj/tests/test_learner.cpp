#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "ngrad/errors.hpp"
#include "ngrad/learner.hpp"

using ngrad::LearnerConfig;
using ngrad::LearnerKind;
using ngrad::LearnerState;
using ngrad::Vector;

namespace {

LearnerConfig make(LearnerKind kind, Vector start, double step = 1.0, std::size_t horizon = 1) {
  LearnerConfig cfg;
  cfg.kind = kind;
  cfg.step_scale = step;
  cfg.horizon = horizon;
  cfg.start = std::move(start);
  return cfg;
}

Vector random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  std::vector<double> c(d);
  double s = 0.0;
  for (double& x : c) {
    x = n(rng);
    s += x * x;
  }
  for (double& x : c) x /= std::sqrt(s);
  return Vector(std::move(c));
}

}  // namespace

TEST_CASE("learner kind names") {
  for (auto k : {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT,
                 LearnerKind::AdaGradDa}) {
    CHECK(ngrad::learner_kind_from_string(ngrad::to_string(k)) == k);
  }
  CHECK_THROWS_AS(ngrad::learner_kind_from_string("adam"), ngrad::ContractViolation);
  CHECK_FALSE(ngrad::is_unit_norm(LearnerKind::AdaGradDa));
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(LearnerState(make(LearnerKind::OgdConst, {1}, 1.0, 0)),
                  ngrad::ContractViolation);
  CHECK_THROWS_AS(LearnerState(make(LearnerKind::DaSqrt, {1}, 0.0)), ngrad::ContractViolation);
  auto kt = make(LearnerKind::KT, {1});
  kt.wealth_init = 0.0;
  CHECK_THROWS_AS(LearnerState{kt}, ngrad::ContractViolation);
  auto ada = make(LearnerKind::AdaGradDa, {1});
  ada.grad_bound_init = -1.0;
  CHECK_THROWS_AS(LearnerState{ada}, ngrad::ContractViolation);
}

TEST_CASE("hand-simulated updates") {
  SUBCASE("ogd_const") {
    LearnerState s(make(LearnerKind::OgdConst, {1}, 1.0, 4));
    CHECK(s.next_point()[0] == 1.0);
    s = s.observe({1});
    CHECK(s.next_point()[0] == 0.5);
    s = s.observe({-1});
    CHECK(s.next_point()[0] == 1.0);
    CHECK(s.steps() == 2);
  }
  SUBCASE("kt") {
    LearnerState s(make(LearnerKind::KT, {1}));
    s = s.observe({1});
    CHECK(s.next_point()[0] == doctest::Approx(0.5).epsilon(1e-15));
    s = s.observe({1});
    CHECK(std::abs(s.next_point()[0]) <= 1e-12);
  }
  SUBCASE("da_sqrt") {
    LearnerState s(make(LearnerKind::DaSqrt, {1}, 0.5));
    s = s.observe({1});
    CHECK(s.next_point()[0] == doctest::Approx(0.5).epsilon(1e-15));
    s = s.observe({1});
    CHECK(std::abs(s.next_point()[0] - 0.29289321881345247560) <= 1e-12);
  }
  SUBCASE("adagrad_da") {
    LearnerState s(make(LearnerKind::AdaGradDa, {1}));
    s = s.observe({1});
    CHECK(std::abs(s.next_point()[0] - 0.29289321881345247560) <= 1e-12);
    CHECK(s.squared_norm_sum() == 1.0);
    s = s.observe({0.5});
    CHECK(s.squared_norm_sum() == 1.25);
  }
}

TEST_CASE("observe is pure") {
  const LearnerState s(make(LearnerKind::DaSqrt, {1, 2}));
  const LearnerState t = s.observe({0.6, 0.8});
  CHECK(s.steps() == 0);
  CHECK(s.next_point() == Vector({1, 2}));
  CHECK(t.steps() == 1);
}

TEST_CASE("norm preconditions") {
  const LearnerState ogd(make(LearnerKind::OgdConst, {1, 1}, 1.0, 4));
  try {
    (void)ogd.observe({1, 1});
    FAIL("expected a contract violation");
  } catch (const ngrad::ContractViolation& e) {
    CHECK(std::string(e.what()).find("ogd_const") != std::string::npos);
  }
  CHECK_THROWS_AS((void)ogd.observe({1}), ngrad::ContractViolation);
  CHECK_NOTHROW((void)ogd.observe({1.0 + 1e-10, 0.0}));
  const LearnerState ada(make(LearnerKind::AdaGradDa, {1}));
  CHECK_THROWS_AS((void)ada.observe({2}), ngrad::ContractViolation);
  CHECK_NOTHROW((void)ada.observe_unchecked({2}));
  CHECK_THROWS_AS(ada.kt_centered_point(), ngrad::ContractViolation);
}

TEST_CASE("regret bound formulas") {
  CHECK(ngrad::regret_bound(make(LearnerKind::OgdConst, {0}, 1.0, 100), 1.0, 100) ==
        doctest::Approx(10.0).epsilon(1e-15));
  CHECK_THROWS_AS(ngrad::regret_bound(make(LearnerKind::OgdConst, {0}, 1.0, 100), 1.0, 50),
                  ngrad::ContractViolation);
  CHECK(ngrad::regret_bound(make(LearnerKind::DaSqrt, {0}, 0.7), 0.0, 49) ==
        doctest::Approx(0.7 * 7.0).epsilon(1e-15));
  CHECK(ngrad::regret_bound(make(LearnerKind::KT, {0}), 0.0, 12345) == 1.0);
  CHECK(ngrad::regret_bound(make(LearnerKind::KT, {0}), 1.0, 100) ==
        doctest::Approx(36.1971566592844).epsilon(1e-13));
  CHECK_THROWS_AS(ngrad::regret_bound(make(LearnerKind::AdaGradDa, {0}), 1.0, 10),
                  ngrad::ContractViolation);
  CHECK(ngrad::regret_bound(make(LearnerKind::AdaGradDa, {0}), 1.0, 10, 9.0) ==
        doctest::Approx(1.5 * 4.0).epsilon(1e-15));
}

TEST_CASE("regret against random comparators stays below the bound") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto kind : {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t d = 1 + trial % 5;
      const std::size_t T = 1 + (trial * 37) % 300;
      std::vector<double> x1c(d);
      for (double& c : x1c) c = u(rng);
      const Vector x1(x1c);
      const auto cfg = make(kind, x1, 1.0, T);
      LearnerState s(cfg);
      const Vector fixed = random_unit(d, rng);
      const double D = 3.0 * (1.0 + u(rng));
      const Vector comparator = ngrad::axpy(-D, fixed, x1);
      double regret = 0.0;
      for (std::size_t t = 0; t < T; ++t) {
        const Vector q = (t % 3 == 2) ? random_unit(d, rng) : fixed;
        regret += ngrad::dot(q, ngrad::difference(s.next_point(), comparator));
        s = s.observe(q);
      }
      CHECK(regret <= ngrad::regret_bound(cfg, D, T) + 1e-9);
    }
  }
}

TEST_CASE("kt is translation invariant") {
  std::mt19937_64 rng(9);
  const LearnerConfig a = make(LearnerKind::KT, {0.0, 0.0, 0.0});
  const LearnerConfig b = make(LearnerKind::KT, {12.5, -3.0, 7.25});
  LearnerState sa(a), sb(b);
  for (int t = 0; t < 200; ++t) {
    const Vector q = random_unit(3, rng);
    sa = sa.observe(q);
    sb = sb.observe(q);
    REQUIRE(sa.kt_centered_point() == sb.kt_centered_point());
  }
}

TEST_CASE("ogd_const iterates stay within the comparator ball plus the step scale") {
  // Losses that pull toward u: q_t = (x_t - u)/||x_t - u||, so prefix regret is nonnegative.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = 0.25 + 0.25 * (trial % 4);
    const std::size_t T = 16 + 13 * trial;
    const Vector u = random_unit(4, rng);
    const Vector x1 = ngrad::axpy(1.5, random_unit(4, rng), u);
    LearnerState s(make(LearnerKind::OgdConst, x1, alpha, T));
    const double d1 = ngrad::distance(x1, u);
    for (std::size_t t = 0; t < T; ++t) {
      const Vector x = s.next_point();
      const double r = ngrad::distance(x, u);
      REQUIRE(r * r <= d1 * d1 + alpha * alpha + 1e-9);
      if (r == 0.0) break;
      s = s.observe(ngrad::scale(1.0 / r, ngrad::difference(x, u)));
    }
  }
}

TEST_CASE("learners are deterministic") {
  std::mt19937_64 rng(1);
  std::vector<Vector> qs;
  for (int i = 0; i < 64; ++i) qs.push_back(random_unit(5, rng));
  for (auto kind : {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT,
                    LearnerKind::AdaGradDa}) {
    const auto cfg = make(kind, {1, 2, 3, 4, 5}, 0.8, 64);
    LearnerState a(cfg), b(cfg);
    for (const Vector& q : qs) {
      a = a.observe(q);
      b = b.observe(q);
    }
    CHECK(a.next_point() == b.next_point());
  }
}
