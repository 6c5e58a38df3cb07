#include "ngrad/holder_checks.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ngrad/errors.hpp"

namespace ngrad {

Vector sample_point(std::size_t dim, std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> coord(-radius, radius);
  std::vector<double> x(dim);
  for (double& c : x) c = coord(rng);
  return Vector(std::move(x));
}

Vector finite_diff_grad(const Problem& p, const Vector& x, double h) {
  if (!(h > 0.0)) throw ContractViolation("finite_diff_grad: h must be positive");
  std::vector<double> base(x.begin(), x.end());
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> plus = base;
    std::vector<double> minus = base;
    plus[i] += h;
    minus[i] -= h;
    out[i] = (p.eval(Vector(std::move(plus))) - p.eval(Vector(std::move(minus)))) / (2.0 * h);
  }
  return Vector(std::move(out));
}

CheckOutcome check_descent_inequality(const Problem& p, const Vector& x, const Vector& y) {
  const HolderSpec& s = p.spec();
  const double fx = p.eval(x);
  const double fy = p.eval(y);
  const Vector step = difference(y, x);
  const double rhs = fx + dot(p.grad(x), step) +
                     s.l_nu / (1.0 + s.nu) * std::pow(l2_norm(step), 1.0 + s.nu);
  const double slack = 1e-9 * (1.0 + std::abs(fy));
  const double residual = fy - rhs;
  return {residual <= slack, residual, slack};
}

CheckOutcome check_grad_bound(const Problem& p, const Vector& x) {
  const HolderSpec& s = p.spec();
  if (!(s.nu > 0.0)) throw ContractViolation("check_grad_bound: requires nu > 0");
  const double lhs = std::pow(l2_norm(p.grad(x)), 1.0 + 1.0 / s.nu);
  const double rhs = (1.0 + 1.0 / s.nu) * std::pow(s.l_nu, 1.0 / s.nu) * (p.eval(x) - p.optimum());
  const double slack = 1e-9 * std::abs(rhs);
  const double residual = lhs - rhs;
  return {residual <= slack, residual, slack};
}

double sample_holder_constant(const Problem& p, std::size_t n, std::uint64_t seed, double radius) {
  if (n == 0) throw ContractViolation("sample_holder_constant: n must be at least 1");
  std::mt19937_64 rng(seed);
  const double nu = p.spec().nu;
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vector x = sample_point(p.dimension(), rng, radius);
    Vector y = sample_point(p.dimension(), rng, radius);
    while (y == x) y = sample_point(p.dimension(), rng, radius);
    const double num = distance(p.grad(x), p.grad(y));
    const double den = std::pow(distance(x, y), nu);
    worst = std::max(worst, num / den);
  }
  return worst;
}

double local_holder_constant(const Problem& p, const Vector& x) {
  const HolderSpec& s = p.spec();
  const double gap = p.eval(x) - p.optimum();
  if (!(gap > 0.0)) throw DegeneratePoint("local_holder_constant: f(x) equals the optimum");
  const double g = l2_norm(p.grad(x));
  if (s.nu == 0.0) return g;
  return std::pow(g, 1.0 + s.nu) / (s.alpha_pow_nu() * std::pow(gap, s.nu));
}

}  // namespace ngrad
