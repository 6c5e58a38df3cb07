#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ngrad/problem.hpp"

namespace ngrad::bench {

struct CheckOptions {
  /// Samples per problem family (points, pairs or sequences, depending on the suite).
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t dimension = 5;
  double radius = 10.0;
};

/// Outcome of one property suite. A sample's margin is how far it exceeded
/// its allowed tolerance, so a suite passes iff every margin is <= 0.
struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t failures = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
  std::string worst_case;
  bool pass = false;
  std::string note;
};

/// gradient, descent, grad_bound, holder_constant, local_constant, convexity,
/// lemma1, regret, bounded_iterates, theorem2, negative_control
const std::vector<std::string_view>& suite_names();

/// Problems every suite is run against, with minimizers drawn from `seed`.
std::vector<Problem> shipped_problems(std::size_t dimension, std::uint64_t seed);

/// Throws ContractViolation for unknown names.
SuiteResult run_suite(std::string_view name, const CheckOptions& options);

/// Theorem 1 check over `problems`; the negative control calls this with
/// corrupted constants.
SuiteResult run_descent_suite(const std::vector<Problem>& problems, const CheckOptions& options);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace ngrad::bench
