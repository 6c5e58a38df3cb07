#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>

#include "ngrad/vector.hpp"

namespace ngrad {

enum class Family { Quadratic, PowerNorm, L2Norm, Huber, LogSumExp };

std::string_view to_string(Family family);
/// Accepts the snake_case names printed by to_string; throws ContractViolation otherwise.
Family family_from_string(std::string_view name);

/// Hölder exponent nu, constant L_nu, and the constant alpha of the
/// gradient-vs-gap inequality ||g|| <= alpha^{nu/(1+nu)} L^{1/(1+nu)} gap^{nu/(1+nu)}.
struct HolderSpec {
  double nu = 1.0;
  double l_nu = 1.0;
  double holder_alpha = 2.0;

  /// Spec for a globally Hölder-smooth function: alpha = 1 + 1/nu, or 1 at nu = 0.
  static HolderSpec global(double nu, double l_nu);

  /// alpha^nu, with value 1 at nu = 0.
  double alpha_pow_nu() const;
  /// (1 + 1/nu)^nu, continuously extended to 1 at nu = 0.
  double corollary_factor() const;
};

/// A convex test function with analytic gradient and known minimizer. All
/// families are shifted so that f(x*) = 0.
///
///   Quadratic   1/2 ||x - x*||^2                     nu = 1, L = 1
///   PowerNorm   ||x - x*||^{1+nu} / (1+nu)           L = 2^{1-nu}
///   L2Norm      ||x - x*||                           nu = 0, L = 2, G = 1
///   Huber       r^2/(2 delta) if r <= delta,
///               r - delta/2 otherwise                nu = 1, L = 1/delta, G = 1
///   LogSumExp   log(sum_i e^{y_i} + e^{-y_i}) - log(2d), y = x - x*
///                                                    nu = 1, L = 1
class Problem {
 public:
  static Problem quadratic(Vector minimizer);
  static Problem power_norm(Vector minimizer, double nu);
  static Problem l2_norm(Vector minimizer);
  static Problem huber(Vector minimizer, double delta);
  static Problem log_sum_exp(Vector minimizer);

  Family family() const noexcept { return family_; }
  std::size_t dimension() const noexcept { return minimizer_.size(); }
  const Vector& minimizer() const noexcept { return minimizer_; }
  double optimum() const noexcept { return 0.0; }
  const HolderSpec& spec() const noexcept { return spec_; }

  /// Huber threshold delta or PowerNorm exponent nu; 0 for the other families.
  double parameter() const noexcept { return parameter_; }

  /// sup_x ||grad f(x)||; infinity for families with unbounded gradients.
  double gradient_bound() const noexcept { return gradient_bound_; }

  /// Distance from x to the set where f fails to be twice differentiable
  /// (infinity when there is none).
  double distance_to_nonsmooth(const Vector& x) const;

  double eval(const Vector& x) const;
  /// Returns the zero vector at the minimizer for the nonsmooth families.
  /// Throws NumericalFailure when the result is not finite.
  Vector grad(const Vector& x) const;

  /// Same function with a different declared Hölder constant. Used for
  /// negative controls.
  Problem with_declared_constant(double l_nu) const;

  std::string name() const;

 private:
  Problem(Family family, Vector minimizer, HolderSpec spec, double parameter, double gradient_bound);

  void require_dim(const Vector& x, const char* where) const;

  Family family_;
  Vector minimizer_;
  HolderSpec spec_;
  double parameter_;
  double gradient_bound_;
};

}  // namespace ngrad
