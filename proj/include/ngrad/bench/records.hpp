#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ngrad/reduction.hpp"

namespace ngrad::bench {

/// Shortest decimal string that round-trips to the same double.
std::string format_real(double value);

/// Relative tolerance for all measured-vs-bound comparisons.
inline constexpr double kBoundSlack = 1e-9;

/// a <= b up to relative slack 1e-9.
bool within_bound(double a, double b) noexcept;

struct BoundCheck {
  bool closed_form = true;  // measured <= closed form
  bool gm = true;           // measured <= theorem2 gm bound (normalized runs)
  bool gm_le_am = true;     // gm bound <= am bound
  bool ok() const noexcept { return closed_form && gm && gm_le_am; }
  std::string describe() const;
};

BoundCheck check_bounds(const BoundReport& report);

/// One row per loss-fed round: t, f_gap, grad_norm, weight, local_L.
/// local_L is empty where it is undefined.
void write_trajectory_csv(std::ostream& out, const RunRecord& run, const BoundReport& report);

/// {config, horizon, steps_taken, terminated_early, f_gap_avg, psi_at_xstar,
///  bound_gm, bound_am, bound_closed_form, ...}
nlohmann::json summary_record(const nlohmann::json& config, double nu, const RunRecord& run,
                              const BoundReport& report);

}  // namespace ngrad::bench
