#include "ngrad/bench/ratefit.hpp"

#include <algorithm>
#include <cmath>

#include "ngrad/bench/records.hpp"

namespace ngrad::bench {

RateFit fit_rate(std::span<const RatePoint> points, double nu) {
  RateFit fit;
  fit.predicted_slope = -(1.0 + nu) / 2.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const RatePoint& pt : points) {
    if (pt.terminated_early) {
      fit.notes.push_back("T=" + format_real(pt.horizon) + " excluded: early stop");
    } else if (!(pt.gap > 0.0)) {
      fit.notes.push_back("T=" + format_real(pt.horizon) + " excluded: zero gap");
    } else {
      xs.push_back(std::log(pt.horizon));
      ys.push_back(std::log(pt.gap));
    }
  }
  if (xs.size() < 3) {
    throw InsufficientData("insufficient data: " + std::to_string(xs.size()) +
                           " usable horizons, need at least 3");
  }
  const auto n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw InsufficientData("insufficient data: all horizons are equal");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.points_used = xs.size();
  return fit;
}

RateFit fit_rate(const std::vector<nlohmann::json>& summaries) {
  std::vector<RatePoint> points;
  std::optional<double> nu;
  for (const auto& s : summaries) {
    try {
      const double record_nu = s.at("nu").get<double>();
      if (nu && *nu != record_nu) {
        throw InsufficientData("summary records mix different nu values");
      }
      nu = record_nu;
      points.push_back({s.at("horizon").get<double>(), s.at("f_gap_avg").get<double>(),
                        s.value("terminated_early", false)});
    } catch (const nlohmann::json::exception& e) {
      throw InsufficientData(std::string("malformed summary record: ") + e.what());
    }
  }
  std::sort(points.begin(), points.end(),
            [](const RatePoint& a, const RatePoint& b) { return a.horizon < b.horizon; });
  return fit_rate(points, nu.value_or(1.0));
}

nlohmann::json to_json(const RateFit& fit) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"r_squared", fit.r_squared},
          {"predicted_slope", fit.predicted_slope},
          {"points_used", fit.points_used},
          {"notes", fit.notes}};
}

}  // namespace ngrad::bench
