#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace ngrad::bench {

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RatePoint {
  double horizon = 0.0;
  double gap = 0.0;
  bool terminated_early = false;
};

/// Least-squares line through (log T, log gap).
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  /// -(1 + nu) / 2
  double predicted_slope = 0.0;
  std::size_t points_used = 0;
  std::vector<std::string> notes;
};

/// Points with gap <= 0 or an early stop are dropped (with a note). Throws
/// InsufficientData when fewer than 3 remain.
RateFit fit_rate(std::span<const RatePoint> points, double nu);

/// Same, reading {horizon, f_gap_avg, terminated_early, nu} from summary records.
RateFit fit_rate(const std::vector<nlohmann::json>& summaries);

nlohmann::json to_json(const RateFit& fit);

}  // namespace ngrad::bench
