#include <doctest.h>

#include <cmath>
#include <random>

#include "ngrad/errors.hpp"
#include "ngrad/holder_checks.hpp"
#include "ngrad/problem.hpp"

using ngrad::Problem;
using ngrad::Vector;

TEST_CASE("family names round-trip") {
  for (auto f : {ngrad::Family::Quadratic, ngrad::Family::PowerNorm, ngrad::Family::L2Norm,
                 ngrad::Family::Huber, ngrad::Family::LogSumExp}) {
    CHECK(ngrad::family_from_string(ngrad::to_string(f)) == f);
  }
  CHECK_THROWS_AS(ngrad::family_from_string("rosenbrock"), ngrad::ContractViolation);
}

TEST_CASE("holder spec") {
  CHECK(ngrad::HolderSpec::global(1.0, 1.0).holder_alpha == 2.0);
  CHECK(ngrad::HolderSpec::global(0.5, 1.0).holder_alpha == 3.0);
  CHECK(ngrad::HolderSpec::global(0.0, 2.0).alpha_pow_nu() == 1.0);
  CHECK_THROWS_AS(ngrad::HolderSpec::global(1.5, 1.0), ngrad::ContractViolation);
  CHECK_THROWS_AS(ngrad::HolderSpec::global(0.5, 0.0), ngrad::ContractViolation);
}

TEST_CASE("eval") {
  CHECK(Problem::quadratic({0}).eval({3}) == 4.5);
  CHECK(Problem::power_norm({0}, 0.5).eval({1}) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(Problem::l2_norm({0, 0}).eval({3, 4}) == 5.0);
  CHECK(Problem::huber({0}, 1.0).eval({0.5}) == 0.125);
  CHECK(Problem::huber({0}, 1.0).eval({10}) == 9.5);
  const Vector xs{0.3, -1.2, 2.0};
  for (const Problem& p : {Problem::quadratic(xs), Problem::power_norm(xs, 0.25),
                           Problem::l2_norm(xs), Problem::huber(xs, 2.0),
                           Problem::log_sum_exp(xs)}) {
    CHECK(p.eval(xs) == p.optimum());
    CHECK_THROWS_AS(p.eval({1.0}), ngrad::ContractViolation);
    CHECK_THROWS_AS(p.grad({1.0}), ngrad::ContractViolation);
  }
}

TEST_CASE("grad") {
  CHECK(Problem::quadratic({0}).grad({3}) == Vector({3}));
  CHECK(Problem::l2_norm({0, 0, 0}).grad({0, 0, 0}) == Vector::zeros(3));
  CHECK(Problem::power_norm({0}, 0.5).grad({4})[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(Problem::power_norm({0}, 0.0).grad({0}) == Vector::zeros(1));
  CHECK(Problem::huber({0, 0}, 1.0).grad({30, 40}) == Vector({0.6, 0.8}));
  CHECK(Problem::log_sum_exp({0, 0}).grad({0, 0}) == Vector::zeros(2));
}

TEST_CASE("log_sum_exp stays finite far from the minimizer") {
  const Problem p = Problem::log_sum_exp({0, 0});
  const Vector x{800.0, -10.0};
  CHECK(std::isfinite(p.eval(x)));
  CHECK(p.eval(x) == doctest::Approx(800.0 - std::log(4.0)).epsilon(1e-14));
  CHECK(ngrad::l2_norm(p.grad(x)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("finite differences") {
  const Vector fd = ngrad::finite_diff_grad(Problem::quadratic({0}), {2}, 1e-6);
  CHECK(std::abs(fd[0] - 2.0) <= 1e-6);

  const Problem lse = Problem::log_sum_exp({0, 0, 0});
  const Vector at{0.0, 0.0, 0.0};
  CHECK(ngrad::l2_norm(ngrad::difference(ngrad::finite_diff_grad(lse, at, 1e-6), lse.grad(at))) <=
        1e-5);

  std::mt19937_64 rng(3);
  const Vector xs{0.5, -0.5};
  const Problem pn = Problem::power_norm(xs, 1.0), q = Problem::quadratic(xs);
  for (int i = 0; i < 50; ++i) {
    const Vector x = ngrad::sample_point(2, rng);
    CHECK(pn.grad(x) == q.grad(x));
    CHECK(pn.eval(x) == q.eval(x));
  }
}

TEST_CASE("descent inequality") {
  std::mt19937_64 rng(5);
  const Problem q = Problem::quadratic({1, 2, 3});
  const Problem l2 = Problem::l2_norm({1, 2, 3});
  const Problem pn = Problem::power_norm({1, 2, 3}, 0.5);
  for (int i = 0; i < 10000; ++i) {
    const Vector x = ngrad::sample_point(3, rng), y = ngrad::sample_point(3, rng);
    const auto out = ngrad::check_descent_inequality(q, x, y);
    REQUIRE(out.pass);
    CHECK(std::abs(out.residual) <= 1e-9 * (1.0 + std::abs(q.eval(y))));
    REQUIRE(ngrad::check_descent_inequality(l2, x, y).pass);
    REQUIRE(ngrad::check_descent_inequality(pn, x, y).pass);
  }
}

TEST_CASE("gradient bound") {
  const auto q = ngrad::check_grad_bound(Problem::quadratic({0}), {3});
  CHECK(q.pass);
  CHECK(q.residual == doctest::Approx(0.0).scale(1.0));
  CHECK(ngrad::check_grad_bound(Problem::power_norm({0}, 0.5), {1}).pass);
  const auto at_min = ngrad::check_grad_bound(Problem::quadratic({2}), {2});
  CHECK(at_min.pass);
  CHECK(at_min.residual == 0.0);
  CHECK_THROWS_AS(ngrad::check_grad_bound(Problem::l2_norm({0}), {1}), ngrad::ContractViolation);
}

TEST_CASE("sampled holder constant") {
  const double quad = ngrad::sample_holder_constant(Problem::quadratic({0, 0}), 1000, 1);
  CHECK(quad <= 1.0 + 1e-12);
  CHECK(quad >= 1.0 - 1e-12);
  const double one = ngrad::sample_holder_constant(Problem::huber({0}, 1.0), 1, 2);
  CHECK(std::isfinite(one));
  CHECK(one >= 0.0);
  // In 1-D the supremum is attained by pairs straddling the minimizer.
  const Problem pn = Problem::power_norm({0}, 0.5);
  const double est = ngrad::sample_holder_constant(pn, 20000, 4, 1.0);
  CHECK(est <= std::sqrt(2.0) + 1e-12);
  CHECK(est >= std::sqrt(2.0) - 1e-3);
  CHECK(pn.spec().l_nu == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("local holder constant") {
  CHECK(ngrad::local_holder_constant(Problem::quadratic({0}), {3}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  const double huber_far = ngrad::local_holder_constant(Problem::huber({0}, 1.0), {10});
  CHECK(huber_far == doctest::Approx(1.0 / 19.0).epsilon(1e-14));
  CHECK(huber_far < 0.1);
  const double pn = ngrad::local_holder_constant(Problem::power_norm({0}, 0.5), {1});
  CHECK(pn <= std::sqrt(2.0));
  CHECK(pn == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(ngrad::local_holder_constant(Problem::l2_norm({0, 0}), {3, 4}) == 1.0);
  CHECK_THROWS_AS(ngrad::local_holder_constant(Problem::quadratic({1}), {1}),
                  ngrad::DegeneratePoint);
}
