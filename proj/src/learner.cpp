#include "ngrad/learner.hpp"

#include <cmath>
#include <string>

#include "ngrad/errors.hpp"

namespace ngrad {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double value, const char* field, LearnerKind kind) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ContractViolation(std::string(to_string(kind)) + ": " + field +
                            " must be positive and finite");
  }
}

}  // namespace

std::string_view to_string(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::OgdConst: return "ogd_const";
    case LearnerKind::DaSqrt: return "da_sqrt";
    case LearnerKind::KT: return "kt";
    case LearnerKind::AdaGradDa: return "adagrad_da";
  }
  return "unknown";
}

LearnerKind learner_kind_from_string(std::string_view name) {
  for (LearnerKind k :
       {LearnerKind::OgdConst, LearnerKind::DaSqrt, LearnerKind::KT, LearnerKind::AdaGradDa}) {
    if (to_string(k) == name) return k;
  }
  throw ContractViolation("unknown learner kind '" + std::string(name) + "'");
}

bool is_unit_norm(LearnerKind kind) noexcept { return kind != LearnerKind::AdaGradDa; }

void LearnerConfig::validate() const {
  if (start.size() == 0) throw ContractViolation(std::string(to_string(kind)) + ": missing start");
  switch (kind) {
    case LearnerKind::OgdConst:
      require_positive(step_scale, "step_scale", kind);
      if (horizon < 1) throw ContractViolation("ogd_const: horizon must be at least 1");
      break;
    case LearnerKind::DaSqrt: require_positive(step_scale, "step_scale", kind); break;
    case LearnerKind::KT: require_positive(wealth_init, "wealth_init", kind); break;
    case LearnerKind::AdaGradDa:
      require_positive(step_scale, "step_scale", kind);
      require_positive(grad_bound_init, "grad_bound_init", kind);
      break;
  }
}

LearnerState::LearnerState(LearnerConfig config) : config_(std::move(config)) {
  config_.validate();
  const Vector zero = Vector::zeros(config_.start.size());
  switch (config_.kind) {
    case LearnerKind::OgdConst: data_ = Ogd{config_.start}; break;
    case LearnerKind::DaSqrt: data_ = Da{zero}; break;
    case LearnerKind::KT: data_ = Kt{zero, 0.0}; break;
    case LearnerKind::AdaGradDa: data_ = AdaGrad{zero, 0.0}; break;
  }
}

Vector LearnerState::kt_centered_point() const {
  const auto* kt = std::get_if<Kt>(&data_);
  if (kt == nullptr) throw ContractViolation("kt_centered_point: learner is not KT");
  const double wealth = config_.wealth_init - kt->bet_loss;
  return scale(-wealth / static_cast<double>(steps_ + 1), kt->loss_sum);
}

double LearnerState::squared_norm_sum() const {
  const auto* ada = std::get_if<AdaGrad>(&data_);
  return ada != nullptr ? ada->squared_norm_sum : 0.0;
}

Vector LearnerState::next_point() const {
  const Vector& x1 = config_.start;
  return std::visit(
      Overloaded{
          [](const Ogd& s) { return s.point; },
          [&](const Da& s) {
            if (steps_ == 0) return x1;
            const double eta = config_.step_scale / std::sqrt(static_cast<double>(steps_));
            return axpy(-eta, s.loss_sum, x1);
          },
          [&](const Kt&) { return axpy(1.0, kt_centered_point(), x1); },
          [&](const AdaGrad& s) {
            const double g = config_.grad_bound_init;
            const double eta = config_.step_scale / std::sqrt(g * g + s.squared_norm_sum);
            return axpy(-eta, s.grad_sum, x1);
          },
      },
      data_);
}

LearnerState LearnerState::observe(const Vector& q) const {
  const double norm = l2_norm(q);
  if (is_unit_norm(config_.kind)) {
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
      throw ContractViolation(std::string(to_string(config_.kind)) +
                              ": loss vector must have unit norm, got " + std::to_string(norm));
    }
  } else if (norm > config_.grad_bound_init + kUnitNormTolerance) {
    throw ContractViolation(std::string(to_string(config_.kind)) + ": gradient norm " +
                            std::to_string(norm) + " exceeds G = " +
                            std::to_string(config_.grad_bound_init));
  }
  return observe_unchecked(q);
}

LearnerState LearnerState::observe_unchecked(const Vector& q) const {
  if (q.size() != config_.start.size()) {
    throw ContractViolation(std::string(to_string(config_.kind)) + ": loss dimension mismatch");
  }
  LearnerState next = *this;
  std::visit(Overloaded{
                 [&](Ogd& s) {
                   const double eta =
                       config_.step_scale / std::sqrt(static_cast<double>(config_.horizon));
                   s.point = axpy(-eta, q, s.point);
                 },
                 [&](Da& s) { s.loss_sum = axpy(1.0, q, s.loss_sum); },
                 [&](Kt& s) {
                   s.bet_loss += dot(q, kt_centered_point());
                   s.loss_sum = axpy(1.0, q, s.loss_sum);
                 },
                 [&](AdaGrad& s) {
                   s.grad_sum = axpy(1.0, q, s.grad_sum);
                   s.squared_norm_sum += dot(q, q);
                 },
             },
             next.data_);
  ++next.steps_;
  return next;
}

double regret_bound(const LearnerConfig& cfg, double comparator_dist, std::size_t horizon,
                    std::optional<double> squared_norm_sum) {
  if (!(comparator_dist >= 0.0)) throw ContractViolation("regret_bound: D must be nonnegative");
  if (horizon < 1) throw ContractViolation("regret_bound: T must be at least 1");
  const double d = comparator_dist;
  const double a = cfg.step_scale;
  const double t = static_cast<double>(horizon);
  switch (cfg.kind) {
    case LearnerKind::OgdConst:
      if (horizon != cfg.horizon) {
        throw ContractViolation("regret_bound: ogd_const bound holds only at its horizon " +
                                std::to_string(cfg.horizon) + ", queried at " +
                                std::to_string(horizon));
      }
      return std::sqrt(t) * d * d / (2.0 * a) + a * std::sqrt(t) / 2.0;
    case LearnerKind::DaSqrt: return std::sqrt(t) * (d * d / (2.0 * a) + a);
    case LearnerKind::KT: {
      const double d0 = cfg.wealth_init;
      return d * std::sqrt(t * std::log(24.0 * t * t * d * d / (d0 * d0) + 1.0)) + d0;
    }
    case LearnerKind::AdaGradDa: {
      if (!squared_norm_sum || !(*squared_norm_sum >= 0.0)) {
        throw ContractViolation("regret_bound: adagrad_da needs the realized sum of ||g_t||^2");
      }
      return (d * d / (2.0 * a) + a) * (cfg.grad_bound_init + std::sqrt(*squared_norm_sum));
    }
  }
  return 0.0;
}

}  // namespace ngrad
