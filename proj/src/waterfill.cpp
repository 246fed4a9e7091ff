#include "ftn/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftn/summation.hpp"

namespace ftn {
namespace {

constexpr double kTemporalCutoff = 1e-12;  // relative, on singular values

void check_budget(double budget) {
  if (!(budget > 0.0) || !std::isfinite(budget))
    throw std::invalid_argument("allocation: power budget must be positive and finite");
}

double measured_spend(const ParallelChannels& ch, const std::vector<double>& q) {
  std::vector<double> spend(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) spend[i] = ch.cost[i] * q[i];
  return pairwise_sum(spend);
}

}  // namespace

std::vector<int> live_temporal_modes(const ParallelChannels& ch) {
  double max_gain = 0.0;
  for (double t : ch.temporal_gain) max_gain = std::max(max_gain, t);
  const double cutoff = kTemporalCutoff * kTemporalCutoff * max_gain;
  std::vector<int> live;
  for (int n = 0; n < ch.block_length; ++n)
    if (ch.temporal_gain[static_cast<std::size_t>(n)] > cutoff) live.push_back(n);
  return live;
}

PowerAllocation waterfill(const ParallelChannels& ch, double budget) {
  check_budget(budget);
  PowerAllocation out;
  out.symbol_power.assign(static_cast<std::size_t>(ch.count()), 0.0);
  out.active.assign(static_cast<std::size_t>(ch.count()), false);

  const std::vector<int> live_n = live_temporal_modes(ch);
  std::vector<int> live_d;
  for (int d = 0; d < ch.spatial_count; ++d)
    if (ch.spatial_gain[static_cast<std::size_t>(d)] > 0.0) live_d.push_back(d);
  if (live_n.empty() || live_d.empty()) return out;  // nothing can carry rate

  // Per active spatial mode, sum over modes of (W - 1/spatial_gain) equals
  // this; the temporal factor cancels between gain and cost.
  const double mode_budget = budget * ch.block_length * ch.delta * ch.symbol_period /
                             (ch.noise_power * static_cast<double>(live_n.size()));

  std::vector<double> inv;  // ascending, since spatial gains are descending
  inv.reserve(live_d.size());
  for (int d : live_d) inv.push_back(1.0 / ch.spatial_gain[static_cast<std::size_t>(d)]);

  double level = 0.0;
  int active_modes = 0;
  double prefix = 0.0;
  for (std::size_t k = 1; k <= inv.size(); ++k) {
    prefix += inv[k - 1];
    const double candidate = (mode_budget + prefix) / static_cast<double>(k);
    if (candidate > inv[k - 1]) {
      level = candidate;
      active_modes = static_cast<int>(k);
    } else {
      break;
    }
  }

  auto fill = [&](double w, int modes) {
    std::fill(out.symbol_power.begin(), out.symbol_power.end(), 0.0);
    std::fill(out.active.begin(), out.active.end(), false);
    for (int a = 0; a < modes; ++a) {
      const int d = live_d[static_cast<std::size_t>(a)];
      const double head = w - inv[static_cast<std::size_t>(a)];
      if (!(head > 0.0)) continue;
      for (int n : live_n) {
        const std::size_t i = static_cast<std::size_t>(d) * ch.block_length + n;
        out.symbol_power[i] =
            ch.noise_power / ch.temporal_gain[static_cast<std::size_t>(n)] * head;
        out.active[i] = out.symbol_power[i] > 0.0;
      }
    }
    out.water_level = w;
    out.spent_power = measured_spend(ch, out.symbol_power);
  };

  if (active_modes > 0) fill(level, active_modes);

  const bool exact_ok = active_modes > 0 &&
                        std::abs(out.spent_power - budget) <= 1e-9 * budget;
  if (!exact_ok) {
    // Bisection on the water level; spend is continuous and nondecreasing in
    // it. Guards inputs that defeat the closed-form pass.
    out.used_fallback = true;
    auto spend_at = [&](double w) {
      double s = 0.0;
      for (double v : inv) s += std::max(0.0, w - v);
      return s;
    };
    double lo = inv.front();
    double hi = inv.front() + mode_budget;
    for (int it = 0; it < 200 && (hi - lo) > 1e-12 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      (spend_at(mid) < mode_budget ? lo : hi) = mid;
    }
    const double w = 0.5 * (lo + hi);
    int modes = 0;
    for (double v : inv)
      if (w > v) ++modes;
    fill(w, modes);
  }
  return out;
}

PowerAllocation uniform_allocation(const ParallelChannels& ch, double budget) {
  check_budget(budget);
  const std::vector<int> live_n = live_temporal_modes(ch);
  if (live_n.empty() || ch.spatial_count == 0)
    throw std::runtime_error("uniform_allocation: no subchannel can carry power");

  PowerAllocation out;
  out.symbol_power.assign(static_cast<std::size_t>(ch.count()), 0.0);
  out.active.assign(static_cast<std::size_t>(ch.count()), false);

  const int frame = ch.block_length + 2 * ch.half_width;
  const double usable = budget * static_cast<double>(ch.block_length) / frame;
  const double share =
      usable / (static_cast<double>(ch.spatial_count) * static_cast<double>(live_n.size()));
  for (int d = 0; d < ch.spatial_count; ++d)
    for (int n : live_n) {
      const std::size_t i = static_cast<std::size_t>(d) * ch.block_length + n;
      out.symbol_power[i] = share / ch.cost[i];
      out.active[i] = true;
    }
  out.spent_power = measured_spend(ch, out.symbol_power);
  return out;
}

double allocation_objective(const ParallelChannels& ch, std::span<const double> symbol_power) {
  constexpr double kLn2 = 0.69314718055994530942;
  std::vector<double> terms(symbol_power.size());
  for (std::size_t i = 0; i < symbol_power.size(); ++i)
    terms[i] = std::log1p(ch.gain[i] * symbol_power[i] / ch.noise_power) / kLn2;
  return pairwise_sum(terms);
}

}  // namespace ftn
