#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "ftn/rate.hpp"

namespace ftn {

inline constexpr std::uint64_t kDefaultSeed = 0xF7A57E2ULL;

/// Noise power per matched-filter sample. One degree of freedom of the SNR
/// definition is fixed here; the budget is then 10^(snr_db/10) directly.
inline constexpr double kNoisePower = 1.0;

enum class AllocationMode { optimal, uniform };

struct TrialConfig {
  int tx = 2;
  int rx = 2;
  int block_length = 500;
  int half_width = 10;
  double delta = 0.67;
  double beta = 0.5;
  /// Time unit of the power constraint. Power is measured per symbol_period,
  /// so with the default 1.0 the budget is the per-Nyquist-interval SNR.
  double symbol_period = 1.0;
  double snr_db = 20.0;
  double eps = 1e-6;
  int trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  AllocationMode allocation = AllocationMode::optimal;
  bool capacity_bound = false;
  int bound_grid = 4096;

  void validate() const;
  PulseSpec pulse() const { return {symbol_period, delta, beta, half_width}; }
  double budget() const { return std::pow(10.0, snr_db / 10.0) * kNoisePower; }
};

struct TrialOutput {
  RatePoint rate;
  double bound_se = 0.0;  ///< infinite-block-length bound, bits/s/Hz (when requested)
};

/// One trial of the full pipeline: per-trial seed -> fading draw -> spatial
/// spectrum -> combine with the temporal spectrum -> allocate -> rate point.
/// temporal_sq holds squared temporal singular values; bound_symbol is the
/// symbol-sample grid for the capacity bound (empty when not requested).
TrialOutput evaluate_trial(const TrialConfig& cfg, std::span<const double> temporal_sq,
                           std::span<const double> bound_symbol, std::uint64_t trial);

struct EnsembleResult {
  double mean_rate = 0.0;      ///< bits/channel use
  double mean_se = 0.0;        ///< bits/s/Hz
  double std_error = 0.0;      ///< standard error of the mean spectral efficiency
  double mean_bound_se = 0.0;  ///< mean capacity bound, bits/s/Hz (when requested)
  int trials_used = 0;
  bool cache_hit = false;
};

/// All trials in trial order. threads == 1 runs the plain serial loop; any
/// other value runs the OpenMP kernel (0 = library default). Both paths
/// produce bit-identical output: trials are seeded independently and written
/// to their own slot, and all aggregation happens afterwards in trial order.
/// cache_hit (optional) reports whether the temporal spectrum came from disk.
std::vector<TrialOutput> run_trials(const TrialConfig& cfg, int threads = 0,
                                    bool* cache_hit = nullptr);

EnsembleResult run_ensemble(const TrialConfig& cfg, int threads = 0);

}  // namespace ftn
