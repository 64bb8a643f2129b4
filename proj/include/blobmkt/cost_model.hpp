#pragma once

#include <optional>
#include <string>

namespace blobmkt {

enum class Venue { Blob, L1 };

const char* venue_name(Venue v);

/// Market-wide constants. Gas prices are treated as fixed; the blob price is
/// the one quantity determined endogenously (see equilibrium.hpp).
struct MarketParams {
  double delay_cost = 1.0;      // a: cost per transaction per time unit of delay
  double gas_price = 1.0;       // G: L1 cost per gas unit
  double post_overhead_gas = 0.0;   // P0: metadata gas per posting transaction
  double calldata_gas_per_tx = 0.0; // P1: calldata gas per transaction in a batch
  double target_blob_rate = 3.0;    // k: protocol target, blobs per time unit
  std::optional<double> max_blob_size;  // U: transactions per blob, when capped
  double price_floor = 0.0;     // minimum blob price when demand is absent

  double overhead_cost() const { return post_overhead_gas * gas_price; }     // P0*G
  double calldata_cost() const { return calldata_gas_per_tx * gas_price; }   // P1*G

  /// Throws ValidationError unless delay_cost > 0, target_blob_rate > 0,
  /// the remaining fields are finite and non-negative, and max_blob_size,
  /// when present, is positive.
  void validate() const;
};

/// A rollup is identified by name and characterized by its transaction
/// arrival rate (transactions per time unit).
struct Rollup {
  std::string id;
  double rate = 0.0;
};

/// A cost-minimizing posting schedule for one rollup on one venue.
///
/// Costs follow the continuous model: posting every `interval` accumulates
/// rate*interval transactions whose delay cost averages
/// delay_cost*interval/2 each, plus the venue's fixed cost per post.
struct PostingPolicy {
  Venue venue = Venue::Blob;
  double interval = 0.0;            // time between posts
  double per_tx_cost = 0.0;         // total cost divided by transactions
  double batch_size = 0.0;          // transactions per post (= rate * interval)
  double total_cost_per_post = 0.0; // posting cost plus delay cost of one post
  bool degenerate = false;          // zero-interval limit (continuous posting)
  bool cap_binds = false;           // blob size cap forced a shorter interval
};

/// Optimal blob posting schedule at the given blob price, ignoring any size
/// cap. The optimal interval is sqrt(2*(P0*G+B)/(a*R)); at that interval the
/// posting cost equals the delay cost, so the total per post is 2*(P0*G+B).
PostingPolicy blob_policy(const Rollup& rollup, double blob_price,
                          const MarketParams& params);

/// Optimal direct-on-L1 schedule. With no posting overhead (P0 = 0) the
/// optimum degenerates to continuous posting: interval 0 and a per-transaction
/// cost of P1*G.
PostingPolicy l1_policy(const Rollup& rollup, const MarketParams& params);

/// The blob price at which the rollup's per-transaction cost is identical on
/// both venues: R*(P1*G)^2/(2a) + 2*P1*G*sqrt(R*P0*G/(2a)). Increasing in R,
/// so higher-rate rollups tolerate higher blob prices.
double indifference_price(const Rollup& rollup, const MarketParams& params);

/// Whichever of blob_policy / l1_policy is cheaper per transaction at the
/// given blob price. Ties go to the blob market.
PostingPolicy choose_strategy(const Rollup& rollup, double blob_price,
                              const MarketParams& params);

/// Blob posting under the size cap U: the interval is min of the uncapped
/// optimum and U/R, with costs re-derived at that interval. Requires
/// params.max_blob_size.
PostingPolicy capped_blob_policy(const Rollup& rollup, double blob_price,
                                 const MarketParams& params);

}  // namespace blobmkt
