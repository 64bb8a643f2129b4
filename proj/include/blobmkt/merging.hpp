#pragma once

#include <string>
#include <vector>

#include "blobmkt/cost_model.hpp"
#include "blobmkt/equilibrium.hpp"

namespace blobmkt {

/// Baseline venue profile of a merging pair.
enum class MergeCase { BothBlob, Mixed, BothL1 };

const char* merge_case_name(MergeCase c);

/// Effect of two rollups pooling their data into one shared blob stream.
///
/// The joint terms (interval, per-tx cost, size) are quoted at the price the
/// merged stream faces on entry. When the pair stays out (BothL1 with the
/// entry price above the pair's indifference price), new_price keeps the
/// standing market price and the joint terms describe the rejected entry.
struct MergeOutcome {
  MergeCase merge_case = MergeCase::BothBlob;
  std::string large_id, small_id;   // merged pair, by rate
  double rate_ratio = 0.0;          // f = small rate / large rate
  double old_price = 0.0;           // clearing price before the merge
  double new_price = 0.0;           // clearing price after the merge
  double joint_interval = 0.0;      // time between joint posts
  double joint_per_tx = 0.0;        // per-transaction cost of the joint stream
  double joint_size = 0.0;          // transactions per joint blob
  bool joined = false;              // merged stream participates after the merge
  bool profitable = false;          // joint per-tx beats the large rollup's baseline
  bool frozen_set_consistent = false;  // held-fixed venues still match the
                                       // indifference prices at new_price
};

/// Recomputes the clearing price with rollups `id_i` and `id_j` replaced by a
/// single rollup of combined rate. The baseline participant set is held
/// fixed apart from the merged pair (the propositions' no-exit assumption);
/// whether that freeze is still self-consistent at the new price is reported
/// separately.
MergeOutcome merge_price(const std::vector<Rollup>& rollups, const std::string& id_i,
                         const std::string& id_j, const MarketParams& params);

/// Cost-minimizing schedule for the combined stream at the post-merge price;
/// delegates to blob_policy with the merged rate.
PostingPolicy joint_policy(double total_rate, double new_price,
                           const MarketParams& params);

}  // namespace blobmkt
