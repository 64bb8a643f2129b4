#include "blobmkt/equilibrium.hpp"

#include <cmath>
#include <limits>

#include "blobmkt/errors.hpp"

namespace blobmkt {

namespace {

void require_sorted_decreasing(const std::vector<Rollup>& rollups) {
  for (std::size_t i = 0; i + 1 < rollups.size(); ++i) {
    if (rollups[i].rate < rollups[i + 1].rate) {
      throw ValidationError("rollups must be sorted by decreasing rate (position " +
                            std::to_string(i + 1) + " breaks the order)");
    }
  }
}

double sqrt_rate_sum(const std::vector<Rollup>& rollups, std::size_t count) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) s += std::sqrt(rollups[i].rate);
  return s;
}

double price_from_sqrt_sum(double sqrt_sum, const MarketParams& params) {
  const double k = params.target_blob_rate;
  const double raw = params.delay_cost * sqrt_sum * sqrt_sum / (2.0 * k * k) -
                     params.overhead_cost();
  return std::max(params.price_floor, raw);
}

// Participation must hold for the marginal insider and fail for the first
// outsider; rates are sorted, so those two checks imply all the others.
bool prefix_consistent(const std::vector<Rollup>& rollups, std::size_t count,
                       double price, const MarketParams& params) {
  if (price > indifference_price(rollups[count - 1], params)) return false;
  if (count < rollups.size() &&
      price <= indifference_price(rollups[count], params)) {
    return false;
  }
  return true;
}

Equilibrium all_on_l1(const std::vector<Rollup>& rollups, const MarketParams& params) {
  Equilibrium eq;
  eq.price = params.price_floor;
  eq.threshold = 0;
  eq.blob_rate = 0.0;
  eq.policies.reserve(rollups.size());
  for (const Rollup& r : rollups) eq.policies.push_back(l1_policy(r, params));
  return eq;
}

// Blobs per time unit produced by the first `count` rollups at price B when
// posting intervals are capped at U/R.
double capped_supply(const std::vector<Rollup>& rollups, std::size_t count,
                     double price, const MarketParams& params) {
  const double fixed = params.overhead_cost() + price;
  const double cap = *params.max_blob_size;
  if (fixed <= 0.0) return std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double r = rollups[i].rate;
    s += std::max(std::sqrt(params.delay_cost * r / (2.0 * fixed)), r / cap);
  }
  return s;
}

// Smallest price at which capped supply does not exceed the target. The
// supply is non-increasing in the price, so a boolean bisection on
// supply(B) <= k is exact even where the supply is flat.
double capped_clearing_price(const std::vector<Rollup>& rollups, std::size_t count,
                             const MarketParams& params) {
  const double k = params.target_blob_rate;
  const double uncapped = price_from_sqrt_sum(sqrt_rate_sum(rollups, count), params);
  // Cap binds first for the largest rollup; if it is slack there, the
  // uncapped closed form already clears.
  const double fixed = params.overhead_cost() + uncapped;
  if (2.0 * fixed * rollups[0].rate <= params.delay_cost * (*params.max_blob_size) *
                                           (*params.max_blob_size)) {
    return uncapped;
  }
  double lo = params.price_floor;
  if (capped_supply(rollups, count, lo, params) <= k) return lo;
  double hi = std::max(1.0, 2.0 * std::max(lo, uncapped));
  int guard = 0;
  while (capped_supply(rollups, count, hi, params) > k) {
    hi *= 2.0;
    if (++guard > 400) {
      throw NumericError("capped clearing price bracket did not close");
    }
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    if (capped_supply(rollups, count, mid, params) <= k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace

double clearing_price(const std::vector<double>& rates, const MarketParams& params) {
  params.validate();
  if (rates.empty()) {
    throw EmptyParticipationError("clearing price undefined with no participants");
  }
  double sqrt_sum = 0.0;
  for (double r : rates) {
    if (!std::isfinite(r) || r <= 0.0) {
      throw ValidationError("rates must be positive and finite");
    }
    sqrt_sum += std::sqrt(r);
  }
  return price_from_sqrt_sum(sqrt_sum, params);
}

Equilibrium solve_equilibrium(const std::vector<Rollup>& rollups,
                              const MarketParams& params) {
  params.validate();
  if (rollups.empty()) {
    throw EmptyParticipationError("no rollups in scenario");
  }
  require_sorted_decreasing(rollups);

  for (std::size_t m = rollups.size(); m >= 1; --m) {
    const double price = price_from_sqrt_sum(sqrt_rate_sum(rollups, m), params);
    if (!prefix_consistent(rollups, m, price, params)) continue;

    Equilibrium eq;
    eq.price = price;
    eq.threshold = m;
    eq.policies.reserve(rollups.size());
    for (const Rollup& r : rollups) {
      eq.policies.push_back(choose_strategy(r, price, params));
    }
    for (std::size_t i = 0; i < m; ++i) {
      eq.blob_rate += 1.0 / eq.policies[i].interval;
    }
    return eq;
  }
  return all_on_l1(rollups, params);
}

Equilibrium solve_equilibrium_capped(const std::vector<Rollup>& rollups,
                                     const MarketParams& params) {
  params.validate();
  if (!params.max_blob_size) {
    throw ValidationError("solve_equilibrium_capped requires max_blob_size");
  }
  if (rollups.empty()) {
    throw EmptyParticipationError("no rollups in scenario");
  }
  require_sorted_decreasing(rollups);

  const double k = params.target_blob_rate;
  const double cap = *params.max_blob_size;

  bool saw_infeasible_prefix = false;
  double rate_over_cap = 0.0;  // running sum of R_i/U
  std::vector<double> prefix_floor(rollups.size());
  for (std::size_t i = 0; i < rollups.size(); ++i) {
    rate_over_cap += rollups[i].rate / cap;
    prefix_floor[i] = rate_over_cap;
  }

  for (std::size_t m = rollups.size(); m >= 1; --m) {
    if (prefix_floor[m - 1] > k) {
      // Even with every blob full, this prefix outproduces the target; no
      // finite price clears it and the marginal rollup gets priced out.
      saw_infeasible_prefix = true;
      continue;
    }
    const double price = capped_clearing_price(rollups, m, params);
    if (!prefix_consistent(rollups, m, price, params)) continue;

    Equilibrium eq;
    eq.price = price;
    eq.threshold = m;
    eq.policies.reserve(rollups.size());
    for (std::size_t i = 0; i < rollups.size(); ++i) {
      eq.policies.push_back(i < m ? capped_blob_policy(rollups[i], price, params)
                                  : l1_policy(rollups[i], params));
    }
    for (std::size_t i = 0; i < m; ++i) {
      eq.blob_rate += 1.0 / eq.policies[i].interval;
    }
    return eq;
  }

  if (saw_infeasible_prefix) {
    throw InfeasibleTargetError(
        "capped blob supply exceeds the target at every price for every "
        "viable participant set");
  }
  return all_on_l1(rollups, params);
}

}  // namespace blobmkt
