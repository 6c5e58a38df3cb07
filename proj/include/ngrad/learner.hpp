#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>

#include "ngrad/vector.hpp"

namespace ngrad {

enum class LearnerKind { OgdConst, DaSqrt, KT, AdaGradDa };

std::string_view to_string(LearnerKind kind);
LearnerKind learner_kind_from_string(std::string_view name);

/// OgdConst, DaSqrt and KT expect unit-norm losses; AdaGradDa takes raw gradients.
bool is_unit_norm(LearnerKind kind) noexcept;

inline constexpr double kUnitNormTolerance = 1e-9;

struct LearnerConfig {
  LearnerKind kind = LearnerKind::OgdConst;
  /// Learning-rate scale for OgdConst, DaSqrt and AdaGradDa.
  double step_scale = 1.0;
  /// Horizon T; only OgdConst uses it.
  std::size_t horizon = 1;
  /// Initial wealth d0 (KT).
  double wealth_init = 1.0;
  /// Gradient norm bound G (AdaGradDa).
  double grad_bound_init = 1.0;
  /// First point x_1.
  Vector start;

  /// Throws ContractViolation when a field the kind depends on is out of range.
  void validate() const;
};

/// One online linear learner. next_point() gives the point for the next
/// round and observe() returns the state after seeing that round's loss.
class LearnerState {
 public:
  explicit LearnerState(LearnerConfig config);

  const LearnerConfig& config() const noexcept { return config_; }
  std::size_t steps() const noexcept { return steps_; }

  Vector next_point() const;

  /// Checks |‖q‖ - 1| <= 1e-9 for unit-norm kinds and ‖q‖ <= G + 1e-9 for AdaGradDa.
  [[nodiscard]] LearnerState observe(const Vector& q) const;

  /// observe() without the norm precondition. The AdaGrad warm-up driver
  /// uses this to keep going after a gradient exceeds G.
  [[nodiscard]] LearnerState observe_unchecked(const Vector& q) const;

  /// KT only: the centered point x_{t+1} - x_1. Translation invariant.
  Vector kt_centered_point() const;

  /// Sum of ||g_i||^2 seen so far (AdaGradDa), 0 for the other kinds.
  double squared_norm_sum() const;

 private:
  struct Ogd {
    Vector point;
  };
  struct Da {
    Vector loss_sum;
  };
  struct Kt {
    Vector loss_sum;
    double bet_loss = 0.0;  // sum <q_i, x_i - x_1>
  };
  struct AdaGrad {
    Vector grad_sum;
    double squared_norm_sum = 0.0;
  };

  LearnerConfig config_;
  std::size_t steps_ = 0;
  std::variant<Ogd, Da, Kt, AdaGrad> data_;
};

/// Closed-form regret bound psi_T(D) against comparators at distance D from x_1.
///
///   OgdConst   sqrt(T) D^2 / (2a) + a sqrt(T) / 2        (T must equal the horizon)
///   DaSqrt     sqrt(T) (D^2 / (2a) + a)
///   KT         D sqrt(T ln(24 T^2 D^2 / d0^2 + 1)) + d0
///   AdaGradDa  (D^2 / (2a) + a)(G + sqrt(sum ||g_t||^2)), needs `squared_norm_sum`
double regret_bound(const LearnerConfig& cfg, double comparator_dist, std::size_t horizon,
                    std::optional<double> squared_norm_sum = std::nullopt);

}  // namespace ngrad
