#include "blobmkt/simulate.hpp"

#include <cmath>
#include <random>

#include "blobmkt/errors.hpp"

namespace blobmkt {

namespace {

// Uniform in [0, 1) from the top 53 bits; keeps the stream identical across
// standard libraries.
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

SimReport run(const SimConfig& config) {
  config.params.validate();
  if (!std::isfinite(config.rate) || config.rate <= 0.0) {
    throw ValidationError("rate must be positive and finite");
  }
  if (!std::isfinite(config.blob_price) || config.blob_price < 0.0) {
    throw ValidationError("blob_price must be non-negative and finite");
  }
  const double interval = config.policy.interval;
  if (interval <= 0.0) {
    throw SimulationError(
        "policy posts continuously (zero interval); discrete simulation "
        "cannot represent it");
  }
  if (!std::isfinite(config.horizon) || config.horizon < 10.0 * interval) {
    throw ValidationError("horizon must cover at least ten posting intervals");
  }

  const long posts = static_cast<long>(std::floor(config.horizon / interval));
  const double end = static_cast<double>(posts) * interval;

  // Fixed cost of one post; calldata for L1 batches is added per transaction.
  const double a = config.params.delay_cost;
  const bool blob = config.policy.venue == Venue::Blob;
  const double post_fixed = config.params.overhead_cost() + (blob ? config.blob_price : 0.0);
  const double per_tx_calldata = blob ? 0.0 : config.params.calldata_cost();

  SimReport report;
  report.posts = posts;
  report.total_posting_cost = static_cast<double>(posts) * post_fixed;

  std::mt19937_64 gen(config.seed);
  double arrival = 0.0;
  while (true) {
    if (config.arrival == ArrivalModel::UniformDeterministic) {
      arrival = static_cast<double>(report.transactions) / config.rate;
    } else {
      arrival += -std::log1p(-uniform01(gen)) / config.rate;
    }
    if (arrival >= end) break;
    // The next post at or after the arrival picks it up.
    const double post_time =
        (std::floor(arrival / interval) + 1.0) * interval;
    report.transactions += 1;
    report.total_delay_cost += a * (post_time - arrival);
    report.total_posting_cost += per_tx_calldata;
  }

  if (report.transactions > 0) {
    report.realized_per_tx_cost =
        (report.total_posting_cost + report.total_delay_cost) /
        static_cast<double>(report.transactions);
  }
  report.closed_form_per_tx_cost = config.policy.per_tx_cost;
  if (report.closed_form_per_tx_cost > 0.0) {
    report.relative_error = report.realized_per_tx_cost /
                                report.closed_form_per_tx_cost -
                            1.0;
  }
  return report;
}

double grid_optimize(const std::function<double(double)>& cost, double t_lo,
                     double t_hi, double step) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo) || !(step > 0.0) ||
      !std::isfinite(t_lo) || !std::isfinite(t_hi) || !std::isfinite(step)) {
    throw ValidationError("grid_optimize needs 0 < t_lo < t_hi and step > 0");
  }
  const long points = static_cast<long>(std::floor((t_hi - t_lo) / step + 1e-9)) + 1;
  if (points < 1) throw ValidationError("empty grid");
  double best_t = t_lo;
  double best = cost(t_lo);
  for (long i = 1; i < points; ++i) {
    const double t = t_lo + static_cast<double>(i) * step;
    const double c = cost(t);
    if (c < best) {
      best = c;
      best_t = t;
    }
  }
  return best_t;
}

}  // namespace blobmkt
