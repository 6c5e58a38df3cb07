#pragma once

#include <cstdint>
#include <random>

#include "ngrad/problem.hpp"
#include "ngrad/vector.hpp"

namespace ngrad {

/// Result of an inequality check lhs <= rhs. `residual` is lhs - rhs and
/// `slack` the tolerance that was allowed on top of rhs.
struct CheckOutcome {
  bool pass = false;
  double residual = 0.0;
  double slack = 0.0;
};

inline constexpr double kDefaultSampleRadius = 10.0;

/// Point with coordinates i.i.d. uniform in [-radius, radius].
Vector sample_point(std::size_t dim, std::mt19937_64& rng, double radius = kDefaultSampleRadius);

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h.
Vector finite_diff_grad(const Problem& p, const Vector& x, double h);

/// f(y) <= f(x) + <grad f(x), y - x> + L/(1+nu) ||x - y||^{1+nu},
/// with additive slack 1e-9 (1 + |f(y)|).
CheckOutcome check_descent_inequality(const Problem& p, const Vector& x, const Vector& y);

/// ||grad f(x)||^{1+1/nu} <= (1 + 1/nu) L^{1/nu} (f(x) - f*), relative slack 1e-9.
/// Throws ContractViolation for nu = 0.
CheckOutcome check_grad_bound(const Problem& p, const Vector& x);

/// max over n sampled pairs of ||grad f(x) - grad f(y)|| / ||x - y||^nu.
double sample_holder_constant(const Problem& p, std::size_t n, std::uint64_t seed,
                              double radius = kDefaultSampleRadius);

/// Smallest L(x) with ||g|| <= alpha^{nu/(1+nu)} L(x)^{1/(1+nu)} (f(x) - f*)^{nu/(1+nu)},
/// i.e. ||g||^{1+nu} / (alpha^nu (f(x) - f*)^nu). At nu = 0 this is ||g||.
/// Throws DegeneratePoint when f(x) <= f*.
double local_holder_constant(const Problem& p, const Vector& x);

}  // namespace ngrad
