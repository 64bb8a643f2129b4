#include "blobmkt/bargaining.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "blobmkt/errors.hpp"

namespace blobmkt {

namespace {

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) {
    throw ValidationError(std::string(name) + " must be finite");
  }
}

}  // namespace

void BargainInput::validate() const {
  require_finite(large_rate, "large_rate");
  require_finite(rate_ratio, "rate_ratio");
  require_finite(solo_price, "solo_price");
  require_finite(joint_price, "joint_price");
  require_finite(delay_cost, "delay_cost");
  if (large_rate <= 0.0) throw ValidationError("large_rate must be positive");
  if (delay_cost <= 0.0) throw ValidationError("delay_cost must be positive");
  if (rate_ratio <= 0.0 || rate_ratio > 1.0) {
    throw ValidationError("rate_ratio must lie in (0, 1]");
  }
  if (solo_price < 0.0) throw ValidationError("solo_price must be non-negative");
  if (joint_price < 0.0) throw ValidationError("joint_price must be non-negative");
}

std::pair<double, double> disagreement_point(const BargainInput& input) {
  input.validate();
  const double large =
      std::sqrt(2.0 * input.solo_price * input.delay_cost / input.large_rate);
  return {large, large / std::sqrt(input.rate_ratio)};
}

BargainOutcome nash_split(const BargainInput& input) {
  input.validate();
  const double f = input.rate_ratio;
  const double joint_rate = (1.0 + f) * input.large_rate;

  BargainOutcome out;
  std::tie(out.large_solo_per_tx, out.small_solo_per_tx) = disagreement_point(input);
  out.joint_interval =
      std::sqrt(2.0 * input.joint_price / (joint_rate * input.delay_cost));
  out.joint_per_tx = input.delay_cost * out.joint_interval;
  out.joint_size = joint_rate * out.joint_interval;
  out.proportional_payment = input.joint_price / (1.0 + f);

  if (out.joint_per_tx >= out.large_solo_per_tx) {
    // Includes the zero-gain boundary, where the split is indeterminate.
    out.deal = false;
    out.no_deal_reason = "joint posting does not beat the large rollup's solo "
                         "per-transaction cost";
    return out;
  }
  out.deal = true;

  out.large_tx_share = out.joint_size / (1.0 + f);
  out.small_tx_share = out.joint_size * f / (1.0 + f);
  out.large_delay = input.delay_cost * input.large_rate * out.joint_interval *
                    out.joint_interval / 2.0;
  out.small_delay = f * out.large_delay;

  if (input.joint_price == 0.0) {
    // Free joint posting: nothing to split, both costs vanish.
    out.large_improvement = 1.0;
    out.small_improvement = 1.0;
    return out;
  }

  // First-order optimum of the product of per-transaction savings.
  const double foc = (input.joint_price + out.small_delay - out.large_delay -
                      out.small_tx_share * out.small_solo_per_tx +
                      out.large_tx_share * out.large_solo_per_tx) /
                     2.0;
  // Same value after cancellation; depends only on the prices and f.
  const double simplified =
      input.joint_price * f / (1.0 + f) +
      std::sqrt(input.joint_price * input.solo_price) *
          (std::sqrt(1.0 / (1.0 + f)) - std::sqrt(f / (1.0 + f)));
  const double scale = std::max({std::abs(foc), std::abs(simplified), 1e-300});
  if (std::abs(foc - simplified) / scale > 1e-9) {
    throw NumericError("bargaining first-order optimum disagrees with its "
                       "simplified form");
  }

  out.large_payment = foc;
  out.small_payment = input.joint_price - foc;
  out.large_joint_per_tx = (out.large_payment + out.large_delay) / out.large_tx_share;
  out.small_joint_per_tx = (out.small_payment + out.small_delay) / out.small_tx_share;
  out.large_improvement = 1.0 - out.large_joint_per_tx / out.large_solo_per_tx;
  out.small_improvement = 1.0 - out.small_joint_per_tx / out.small_solo_per_tx;
  return out;
}

MultiBargainOutcome nash_split_multi(const std::vector<double>& rates,
                                     const std::vector<double>& solo_prices,
                                     double joint_price, double delay_cost) {
  const std::size_t m = rates.size();
  if (m < 2) throw ValidationError("need at least two participants");
  if (solo_prices.size() != m) {
    throw ValidationError("one baseline price per participant required");
  }
  require_finite(joint_price, "joint_price");
  require_finite(delay_cost, "delay_cost");
  if (joint_price <= 0.0) throw ValidationError("joint_price must be positive");
  if (delay_cost <= 0.0) throw ValidationError("delay_cost must be positive");
  for (std::size_t i = 0; i < m; ++i) {
    require_finite(rates[i], "rate");
    require_finite(solo_prices[i], "solo price");
    if (rates[i] <= 0.0) throw ValidationError("rates must be positive");
    if (solo_prices[i] < 0.0) throw ValidationError("solo prices must be non-negative");
  }

  const double total_rate = std::accumulate(rates.begin(), rates.end(), 0.0);
  const double interval = std::sqrt(2.0 * joint_price / (delay_cost * total_rate));
  const double joint_size = total_rate * interval;

  // cap[i]: participant i's total saving when it pays nothing — transactions
  // valued at the solo per-tx cost, minus its delay inside the joint stream.
  // The saving at payment p is cap[i] - p, so the Nash optimum equalizes the
  // savings of everyone who pays.
  std::vector<double> cap(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double tx_share = joint_size * rates[i] / total_rate;
    const double delay = delay_cost * rates[i] * interval * interval / 2.0;
    const double solo_per_tx = std::sqrt(2.0 * solo_prices[i] * delay_cost / rates[i]);
    cap[i] = tx_share * solo_per_tx - delay;
  }

  MultiBargainOutcome out;
  const double total_cap = std::accumulate(cap.begin(), cap.end(), 0.0);
  if (total_cap <= joint_price) {
    out.no_deal_reason = "joint posting cannot make every participant better off";
    return out;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (cap[i] <= 0.0) {
      out.no_deal_reason = "participant " + std::to_string(i) +
                           " loses from the joint stream at any payment";
      return out;
    }
  }

  // Projected coordinate ascent on sum_i log(cap[i] - p[i]) over the payment
  // simplex: each pair step redistributes its combined payment at the exact
  // two-variable optimum, clamped to non-negative payments.
  std::vector<double>& p = out.payments;
  p.resize(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = joint_price * cap[i] / total_cap;

  const auto kkt_residual = [&]() {
    double active_lo = std::numeric_limits<double>::infinity();
    double active_hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (p[i] > 0.0) {
        active_lo = std::min(active_lo, cap[i] - p[i]);
        active_hi = std::max(active_hi, cap[i] - p[i]);
      }
    }
    double res = active_hi - active_lo;
    for (std::size_t i = 0; i < m; ++i) {
      if (p[i] == 0.0) res = std::max(res, cap[i] - active_lo);
    }
    double paid = std::accumulate(p.begin(), p.end(), 0.0);
    return std::max(res, std::abs(paid - joint_price));
  };

  const int max_sweeps = 10000;
  for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double s = p[i] + p[j];
        p[i] = std::clamp((cap[i] - cap[j] + s) / 2.0, 0.0, s);
        p[j] = s - p[i];
      }
    }
    out.kkt_residual = kkt_residual();
    if (out.kkt_residual < 1e-10 * std::max(1.0, joint_price)) break;
  }
  if (out.kkt_residual >= 1e-8 * std::max(1.0, joint_price)) {
    throw NumericError("multi-party split did not converge: residual " +
                       std::to_string(out.kkt_residual) + " after " +
                       std::to_string(out.sweeps) + " sweeps");
  }
  out.deal = true;
  return out;
}

double structural_ratio_bound(double rate_ratio) {
  require_finite(rate_ratio, "rate_ratio");
  if (rate_ratio <= 0.0 || rate_ratio > 1.0) {
    throw ValidationError("rate_ratio must lie in (0, 1]");
  }
  const double root = 1.0 + std::sqrt(rate_ratio);
  return (1.0 + rate_ratio) / (root * root);
}

}  // namespace blobmkt
