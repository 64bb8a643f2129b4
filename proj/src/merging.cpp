#include "blobmkt/merging.hpp"

#include <algorithm>
#include <cmath>

#include "blobmkt/errors.hpp"

namespace blobmkt {

const char* merge_case_name(MergeCase c) {
  switch (c) {
    case MergeCase::BothBlob: return "both-blob";
    case MergeCase::Mixed: return "mixed";
    case MergeCase::BothL1: return "both-l1";
  }
  return "?";
}

namespace {

std::size_t index_of(const std::vector<Rollup>& rollups, const std::string& id) {
  for (std::size_t i = 0; i < rollups.size(); ++i) {
    if (rollups[i].id == id) return i;
  }
  throw ValidationError("unknown rollup id '" + id + "'");
}

}  // namespace

MergeOutcome merge_price(const std::vector<Rollup>& rollups, const std::string& id_i,
                         const std::string& id_j, const MarketParams& params) {
  if (id_i == id_j) {
    throw ValidationError("cannot merge a rollup with itself ('" + id_i + "')");
  }
  const std::size_t i = index_of(rollups, id_i);
  const std::size_t j = index_of(rollups, id_j);

  const Equilibrium baseline = solve_equilibrium(rollups, params);
  const bool i_blobs = baseline.policies[i].venue == Venue::Blob;
  const bool j_blobs = baseline.policies[j].venue == Venue::Blob;

  MergeOutcome out;
  out.merge_case = i_blobs && j_blobs ? MergeCase::BothBlob
                   : i_blobs || j_blobs ? MergeCase::Mixed
                                        : MergeCase::BothL1;
  const std::size_t large = rollups[i].rate >= rollups[j].rate ? i : j;
  const std::size_t small = large == i ? j : i;
  out.large_id = rollups[large].id;
  out.small_id = rollups[small].id;
  out.rate_ratio = rollups[small].rate / rollups[large].rate;
  out.old_price = baseline.price;

  // Clearing set after the merge: baseline participants minus the pair, plus
  // the combined stream. No one else switches venue.
  const double merged_rate = rollups[i].rate + rollups[j].rate;
  std::vector<double> rates;
  for (std::size_t q = 0; q < baseline.threshold; ++q) {
    if (q != i && q != j) rates.push_back(rollups[q].rate);
  }
  rates.push_back(merged_rate);
  const double entry_price = clearing_price(rates, params);

  const Rollup merged{rollups[large].id + "+" + rollups[small].id, merged_rate};
  out.joined = out.merge_case != MergeCase::BothL1 ||
               entry_price <= indifference_price(merged, params);
  out.new_price = out.joined ? entry_price : baseline.price;

  const PostingPolicy joint = joint_policy(merged_rate, entry_price, params);
  out.joint_interval = joint.interval;
  out.joint_per_tx = joint.per_tx_cost;
  out.joint_size = joint.batch_size;
  out.profitable =
      out.joined && joint.per_tx_cost < baseline.policies[large].per_tx_cost;

  out.frozen_set_consistent = true;
  if (out.joined) {
    for (std::size_t q = 0; q < rollups.size(); ++q) {
      if (q == i || q == j) continue;
      const bool wants_blob =
          out.new_price <= indifference_price(rollups[q], params);
      if (wants_blob != (q < baseline.threshold)) {
        out.frozen_set_consistent = false;
        break;
      }
    }
    if (out.new_price > indifference_price(merged, params)) {
      out.frozen_set_consistent = false;
    }
  } else {
    // The pair stays on L1; that stance is consistent only if the standing
    // price also keeps the combined stream out.
    out.frozen_set_consistent =
        baseline.price > indifference_price(merged, params);
  }
  return out;
}

PostingPolicy joint_policy(double total_rate, double new_price,
                           const MarketParams& params) {
  if (!std::isfinite(total_rate) || total_rate <= 0.0) {
    throw ValidationError("joint rate must be positive and finite");
  }
  return blob_policy(Rollup{"joint", total_rate}, new_price, params);
}

}  // namespace blobmkt
