#include "blobmkt/cost_model.hpp"

#include <cmath>

#include "blobmkt/errors.hpp"

namespace blobmkt {

const char* venue_name(Venue v) { return v == Venue::Blob ? "blob" : "l1"; }

namespace {

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

void require_valid_rollup(const Rollup& rollup) {
  require_finite(rollup.rate, "rollup rate");
  if (rollup.rate <= 0.0) {
    throw ValidationError("rollup rate must be positive (rollup '" + rollup.id + "')");
  }
}

}  // namespace

void MarketParams::validate() const {
  require_finite(delay_cost, "delay_cost");
  require_finite(gas_price, "gas_price");
  require_finite(post_overhead_gas, "post_overhead_gas");
  require_finite(calldata_gas_per_tx, "calldata_gas_per_tx");
  require_finite(target_blob_rate, "target_blob_rate");
  require_finite(price_floor, "price_floor");
  if (delay_cost <= 0.0) throw ValidationError("delay_cost must be positive");
  if (target_blob_rate <= 0.0) throw ValidationError("target_blob_rate must be positive");
  if (gas_price < 0.0) throw ValidationError("gas_price must be non-negative");
  if (post_overhead_gas < 0.0) throw ValidationError("post_overhead_gas must be non-negative");
  if (calldata_gas_per_tx < 0.0) throw ValidationError("calldata_gas_per_tx must be non-negative");
  if (price_floor < 0.0) throw ValidationError("price_floor must be non-negative");
  if (max_blob_size) {
    require_finite(*max_blob_size, "max_blob_size");
    if (*max_blob_size <= 0.0) throw ValidationError("max_blob_size must be positive");
  }
}

PostingPolicy blob_policy(const Rollup& rollup, double blob_price,
                          const MarketParams& params) {
  params.validate();
  require_valid_rollup(rollup);
  require_finite(blob_price, "blob_price");
  if (blob_price < 0.0) throw ValidationError("blob_price must be non-negative");

  const double fixed = params.overhead_cost() + blob_price;  // P0*G + B
  PostingPolicy p;
  p.venue = Venue::Blob;
  if (fixed == 0.0) {
    // Free posts: the optimum collapses to continuous posting.
    p.degenerate = true;
    return p;
  }
  p.interval = std::sqrt(2.0 * fixed / (params.delay_cost * rollup.rate));
  p.per_tx_cost = params.delay_cost * p.interval;
  p.batch_size = rollup.rate * p.interval;
  p.total_cost_per_post = 2.0 * fixed;  // posting cost equals delay cost at the optimum
  return p;
}

PostingPolicy l1_policy(const Rollup& rollup, const MarketParams& params) {
  params.validate();
  require_valid_rollup(rollup);

  const double overhead = params.overhead_cost();  // P0*G
  PostingPolicy p;
  p.venue = Venue::L1;
  if (overhead == 0.0) {
    // Without per-post overhead, waiting only adds delay cost.
    p.degenerate = true;
    p.per_tx_cost = params.calldata_cost();
    return p;
  }
  p.interval = std::sqrt(2.0 * overhead / (params.delay_cost * rollup.rate));
  p.batch_size = rollup.rate * p.interval;
  p.per_tx_cost = std::sqrt(2.0 * overhead * params.delay_cost / rollup.rate) +
                  params.calldata_cost();
  p.total_cost_per_post = overhead + p.batch_size * params.calldata_cost() +
                          params.delay_cost * rollup.rate * p.interval * p.interval / 2.0;
  return p;
}

double indifference_price(const Rollup& rollup, const MarketParams& params) {
  params.validate();
  require_valid_rollup(rollup);
  const double per_tx_calldata = params.calldata_cost();  // P1*G
  return rollup.rate * per_tx_calldata * per_tx_calldata / (2.0 * params.delay_cost) +
         2.0 * per_tx_calldata *
             std::sqrt(rollup.rate * params.overhead_cost() / (2.0 * params.delay_cost));
}

PostingPolicy choose_strategy(const Rollup& rollup, double blob_price,
                              const MarketParams& params) {
  // Tie goes to the blob market, making the participation threshold inclusive.
  if (blob_price <= indifference_price(rollup, params)) {
    return blob_policy(rollup, blob_price, params);
  }
  return l1_policy(rollup, params);
}

PostingPolicy capped_blob_policy(const Rollup& rollup, double blob_price,
                                 const MarketParams& params) {
  params.validate();
  if (!params.max_blob_size) {
    throw ValidationError("capped_blob_policy requires max_blob_size");
  }
  PostingPolicy p = blob_policy(rollup, blob_price, params);
  const double max_interval = *params.max_blob_size / rollup.rate;  // U/R
  if (p.degenerate || p.interval <= max_interval) {
    return p;
  }
  p.cap_binds = true;
  p.interval = max_interval;
  p.batch_size = rollup.rate * p.interval;  // = U
  p.total_cost_per_post =
      params.overhead_cost() + blob_price +
      params.delay_cost * rollup.rate * p.interval * p.interval / 2.0;
  p.per_tx_cost = p.total_cost_per_post / p.batch_size;
  return p;
}

}  // namespace blobmkt
