#pragma once

#include <cstddef>
#include <vector>

#include "blobmkt/cost_model.hpp"

namespace blobmkt {

/// Market state in which the blob price makes average blob throughput hit
/// the protocol target. Rollups are indexed as supplied (sorted by
/// decreasing rate); those with index < threshold post blobs, the rest use
/// the L1 calldata market.
struct Equilibrium {
  double price = 0.0;        // clearing blob price
  std::size_t threshold = 0; // number of blob-posting rollups (n*)
  std::vector<PostingPolicy> policies;  // one per rollup, input order
  double blob_rate = 0.0;    // achieved blobs per time unit over participants
};

/// Price at which the listed rollups, all posting blobs, produce exactly the
/// target number of blobs per time unit:
///   max(price_floor, a*(sum_i sqrt(R_i))^2 / (2 k^2) - P0*G).
/// Throws EmptyParticipationError when `rates` is empty.
double clearing_price(const std::vector<double>& rates, const MarketParams& params);

/// Finds the threshold n* and the clearing price for rollups sorted by
/// decreasing rate: the largest m whose prefix clears at a price the m-th
/// rollup still tolerates while the (m+1)-th does not. When no m >= 1 is
/// self-consistent, everyone posts on L1 at the floor price.
Equilibrium solve_equilibrium(const std::vector<Rollup>& rollups,
                              const MarketParams& params);

/// Same threshold search under the blob size cap U. Each candidate prefix's
/// price is solved by monotone bisection of the capped supply
///   sum_i max(sqrt(a*R_i/(2(P0*G+B))), R_i/U)
/// against the target. Throws InfeasibleTargetError when capped supply
/// exceeds the target at every price for every otherwise-viable prefix.
Equilibrium solve_equilibrium_capped(const std::vector<Rollup>& rollups,
                                     const MarketParams& params);

}  // namespace blobmkt
