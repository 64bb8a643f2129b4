#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blobmkt/cost_model.hpp"
#include "blobmkt/simulate.hpp"

namespace blobmkt {

struct MergeSpec {
  std::string first, second;
};

/// Either two rollup ids (prices derived from the market) or direct numbers.
struct BargainSpec {
  std::optional<std::string> first, second;
  std::optional<double> rate_ratio;   // f
  std::optional<double> solo_price;   // B
  std::optional<double> joint_price;  // B_N
  std::optional<double> large_rate;   // R; defaults to the largest rollup
};

struct SimSpec {
  std::string rollup_id;
  ArrivalModel arrival = ArrivalModel::UniformDeterministic;
  double horizon = 0.0;
  std::uint64_t seed = 0;
  std::optional<Venue> venue;  // default: whichever is cheaper at blob_price
};

/// Everything a command needs, parsed and validated from one JSON document.
/// Rollups are kept sorted by decreasing rate (ties by id); `resorted` is set
/// when the file listed them in another order.
struct Scenario {
  MarketParams params;
  std::vector<Rollup> rollups;
  std::optional<double> blob_price;
  std::optional<MergeSpec> merge;
  std::optional<BargainSpec> bargain;
  std::optional<SimSpec> sim;
  bool resorted = false;
};

/// Parses a scenario from JSON text. Unknown fields are rejected so typos
/// surface as errors; all numeric fields must be finite and satisfy the
/// domain invariants. Throws ValidationError with the offending field named.
Scenario parse_scenario(const std::string& text);

/// parse_scenario over the contents of `path`.
Scenario load_scenario(const std::string& path);

}  // namespace blobmkt
