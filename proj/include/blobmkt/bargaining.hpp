#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace blobmkt {

/// Two-party cost-sharing problem: a large rollup of rate R and a small one
/// of rate R*f share one blob stream. Posting overhead is taken as zero here
/// (the cost-sharing model prices blobs only).
struct BargainInput {
  double large_rate = 1.0;   // R
  double rate_ratio = 1.0;   // f in (0, 1]
  double solo_price = 0.0;   // blob price each pays when posting alone
  double joint_price = 0.0;  // blob price of the shared stream
  double delay_cost = 1.0;   // a

  void validate() const;  // throws ValidationError
};

/// Nash-bargaining split of the joint blob price, plus everything needed to
/// judge it: effective per-transaction costs, improvements over posting
/// alone, and the proportional benchmark.
struct BargainOutcome {
  bool deal = false;
  std::string no_deal_reason;

  double large_payment = 0.0;  // share of the joint price paid by the large rollup
  double small_payment = 0.0;  // remainder (the two sum to the joint price)

  double joint_interval = 0.0;
  double joint_per_tx = 0.0;
  double joint_size = 0.0;
  double large_tx_share = 0.0;   // joint_size / (1+f)
  double small_tx_share = 0.0;   // joint_size * f / (1+f)
  double large_delay = 0.0;      // total delay cost of the large rollup's slice
  double small_delay = 0.0;

  double large_solo_per_tx = 0.0;   // disagreement per-tx costs
  double small_solo_per_tx = 0.0;
  double large_joint_per_tx = 0.0;  // per-tx costs under the computed split
  double small_joint_per_tx = 0.0;
  double large_improvement = 0.0;   // relative per-tx saving vs posting alone
  double small_improvement = 0.0;
  double proportional_payment = 0.0;  // rate-proportional benchmark for the large rollup
};

/// Per-transaction costs each side falls back to with no agreement:
/// (sqrt(2*B*a/R), same/sqrt(f)).
std::pair<double, double> disagreement_point(const BargainInput& input);

/// Maximizes the product of the two rollups' per-transaction savings over
/// splits of the joint price. The first-order optimum is closed-form; the
/// result is cross-checked against its simplified form (which depends only
/// on the two prices and f) to 1e-9 relative. Returns a no-deal outcome when
/// the joint stream does not beat the large rollup's solo cost.
BargainOutcome nash_split(const BargainInput& input);

/// m-party generalization: payments maximizing the product of per-transaction
/// savings over the simplex {p_i >= 0, sum p_i = joint_price}. Disagreement
/// for participant i is solo blob posting at its own baseline price.
struct MultiBargainOutcome {
  bool deal = false;
  std::string no_deal_reason;
  std::vector<double> payments;
  double kkt_residual = 0.0;
  int sweeps = 0;
};

MultiBargainOutcome nash_split_multi(const std::vector<double>& rates,
                                     const std::vector<double>& solo_prices,
                                     double joint_price, double delay_cost);

/// Lower bound on joint_price/solo_price when both parties posted blobs
/// before merging: (1+f)/(1+sqrt(f))^2, attained by a two-rollup market.
double structural_ratio_bound(double rate_ratio);

}  // namespace blobmkt
