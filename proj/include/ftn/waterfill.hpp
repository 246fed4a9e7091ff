#pragma once

#include <span>
#include <vector>

#include "ftn/channel.hpp"

namespace ftn {

/// A power allocation over the D*N parallel subchannels.
struct PowerAllocation {
  std::vector<double> symbol_power;  ///< q_i >= 0, transformed-domain symbol powers
  std::vector<bool> active;          ///< q_i > 0
  double water_level = 0.0;   ///< common level W; active channels satisfy q = (noise/temporal^2)(W - 1/spatial^2)
  double spent_power = 0.0;   ///< sum_i cost_i q_i
  bool used_fallback = false; ///< exact active-set pass rejected, bisection used
};

/// Exact water-filling: maximizes sum_i log2(1 + gain_i q_i / noise) subject
/// to sum_i cost_i q_i <= budget, q_i >= 0. Because gain/cost splits into a
/// spatial factor times a shared temporal factor, the water level is constant
/// per spatial mode; the active set is found by a closed-form pass over the
/// at most D spatial modes (strongest first), with a bisection fallback on
/// the level should the pass reject its own solution. Subchannels whose
/// temporal singular value is below 1e-12 of the largest carry no rate and
/// are excluded from both the allocation and the level equation. Modes
/// sitting exactly on the water line stay inactive with zero power.
PowerAllocation waterfill(const ParallelChannels& ch, double budget);

/// Baseline allocation, uniform across space and time: every subchannel that
/// can carry power receives the same cost-weighted share, and the budget is
/// spread over the whole N+2L-sample detection frame, of which only N slots
/// carry symbols (so the spend is budget * N/(N+2L)). Throws when no
/// subchannel can carry power.
PowerAllocation uniform_allocation(const ParallelChannels& ch, double budget);

/// The optimization objective sum_i log2(1 + gain_i q_i / noise), shared by
/// the solver, the baseline and the test oracle.
double allocation_objective(const ParallelChannels& ch, std::span<const double> symbol_power);

/// Indices of temporal modes above the 1e-12 relative singular-value cutoff.
std::vector<int> live_temporal_modes(const ParallelChannels& ch);

}  // namespace ftn
