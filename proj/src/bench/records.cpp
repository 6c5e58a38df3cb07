#include "ngrad/bench/records.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace ngrad::bench {

using nlohmann::json;

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

bool within_bound(double a, double b) noexcept { return a <= b + kBoundSlack * std::abs(b); }

std::string BoundCheck::describe() const {
  std::string out;
  if (!closed_form) out += "measured > closed_form; ";
  if (!gm) out += "measured > theorem2_gm; ";
  if (!gm_le_am) out += "theorem2_gm > theorem2_am; ";
  if (out.empty()) out = "ok";
  return out;
}

BoundCheck check_bounds(const BoundReport& report) {
  BoundCheck c;
  c.closed_form = within_bound(report.measured, report.closed_form_bound);
  if (report.theorem2_bound_gm && report.theorem2_bound_am) {
    c.gm = within_bound(report.measured, *report.theorem2_bound_gm);
    c.gm_le_am = within_bound(*report.theorem2_bound_gm, *report.theorem2_bound_am);
  }
  return c;
}

void write_trajectory_csv(std::ostream& out, const RunRecord& run, const BoundReport& report) {
  out << "t,f_gap,grad_norm,weight,local_L\n";
  for (std::size_t t = 0; t < run.steps_taken; ++t) {
    out << (t + 1) << ',' << format_real(run.suboptimalities[t]) << ','
        << format_real(run.grad_norms[t]) << ',' << format_real(run.weight(t)) << ',';
    if (t < report.local_constants.size() && report.local_constants[t]) {
      out << format_real(*report.local_constants[t]);
    }
    out << '\n';
  }
}

json summary_record(const json& config, double nu, const RunRecord& run,
                    const BoundReport& report) {
  const BoundCheck check = check_bounds(report);
  json j{{"config", config},
         {"nu", nu},
         {"horizon", run.horizon},
         {"steps_taken", run.steps_taken},
         {"terminated_early", run.terminated_early},
         {"f_gap_avg", report.measured},
         {"psi_at_xstar", report.psi_at_xstar},
         {"bound_gm", report.theorem2_bound_gm ? json(*report.theorem2_bound_gm) : json(nullptr)},
         {"bound_am", report.theorem2_bound_am ? json(*report.theorem2_bound_am) : json(nullptr)},
         {"bound_closed_form", report.closed_form_bound},
         {"bounds_ok", check.ok()}};
  j["stop_index"] = run.stop_index ? json(*run.stop_index) : json(nullptr);
  if (run.averaging == Averaging::Uniform) j["grad_bound_exceeded"] = run.grad_bound_exceeded;
  return j;
}

}  // namespace ngrad::bench
