#pragma once

#include <cstdint>
#include <functional>

#include "blobmkt/cost_model.hpp"

namespace blobmkt {

enum class ArrivalModel { UniformDeterministic, Poisson };

/// One discrete-event run: transactions arrive at `rate`, a post fires every
/// policy.interval, and realized costs are compared with the closed form.
struct SimConfig {
  ArrivalModel arrival = ArrivalModel::UniformDeterministic;
  double rate = 1.0;          // transactions per time unit
  PostingPolicy policy;       // venue and interval to simulate
  MarketParams params;        // cost constants
  double blob_price = 0.0;    // paid per post when the venue is Blob
  double horizon = 0.0;       // truncated to a whole number of intervals
  std::uint64_t seed = 0;     // Poisson stream seed (mersenne twister)
};

struct SimReport {
  long posts = 0;
  long transactions = 0;
  double total_posting_cost = 0.0;
  double total_delay_cost = 0.0;
  double realized_per_tx_cost = 0.0;
  double closed_form_per_tx_cost = 0.0;  // policy.per_tx_cost
  double relative_error = 0.0;
};

/// Runs the simulation. Deterministic arrivals sit at spacing 1/rate from
/// time zero; Poisson arrivals use exponential gaps drawn from mt19937_64
/// via the inverse CDF, so a fixed seed reproduces the report bit for bit.
/// Transactions after the last post are not accounted. Rejects zero-interval
/// (continuous-posting) policies and horizons under ten intervals.
SimReport run(const SimConfig& config);

/// Argmin of `cost` over the grid t_lo, t_lo+step, ..., <= t_hi; ties go to
/// the smaller t. The brute-force oracle for every first-order optimum here.
double grid_optimize(const std::function<double(double)>& cost, double t_lo,
                     double t_hi, double step);

}  // namespace blobmkt
