#include "ftn/ensemble.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <stdexcept>

#include "ftn/linalg.hpp"
#include "ftn/rng.hpp"
#include "ftn/spectrum_cache.hpp"
#include "ftn/summation.hpp"

namespace ftn {

void TrialConfig::validate() const {
  pulse().validate();
  if (tx < 1 || rx < 1) throw std::invalid_argument("config: antenna counts must be >= 1");
  if (block_length < 1) throw std::invalid_argument("config: block length must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("config: eps must lie in (0,1)");
  if (trials < 1) throw std::invalid_argument("config: need at least one trial");
  if (capacity_bound && bound_grid < 256)
    throw std::invalid_argument("config: capacity-bound grid must be at least 256");
}

TrialOutput evaluate_trial(const TrialConfig& cfg, std::span<const double> temporal_sq,
                           std::span<const double> bound_symbol, std::uint64_t trial) {
  const std::uint64_t s = trial_seed(cfg.seed, trial);
  const Eigen::MatrixXcd h = generate_channel(cfg.tx, cfg.rx, s);
  const std::vector<double> spatial = dense_singular_values(h);

  const PulseSpec pulse = cfg.pulse();
  const double budget = cfg.budget();
  const ParallelChannels ch =
      combine_from_gains(spatial, temporal_sq, pulse, cfg.block_length, kNoisePower);
  const PowerAllocation alloc = cfg.allocation == AllocationMode::optimal
                                    ? waterfill(ch, budget)
                                    : uniform_allocation(ch, budget);
  TrialOutput out;
  out.rate = evaluate_rate(ch, alloc, cfg.eps, cfg.beta);

  if (!bound_symbol.empty()) {
    const ParallelChannels grid_ch = combine_from_gains(
        spatial, bound_symbol, pulse, static_cast<int>(bound_symbol.size()), kNoisePower);
    const PowerAllocation grid_alloc = waterfill(grid_ch, budget);
    out.bound_se =
        spectral_efficiency(sum_capacity(grid_ch, grid_alloc), cfg.delta, cfg.beta);
  }
  return out;
}

std::vector<TrialOutput> run_trials(const TrialConfig& cfg, int threads, bool* cache_hit) {
  cfg.validate();
  const CachedSpectrum cached = temporal_spectrum(
      {cfg.block_length, cfg.delta, cfg.beta, cfg.half_width});
  if (cache_hit) *cache_hit = cached.cache_hit;

  std::vector<double> temporal_sq(cached.temporal.size());
  for (std::size_t n = 0; n < temporal_sq.size(); ++n)
    temporal_sq[n] = cached.temporal[n] * cached.temporal[n];

  std::vector<double> bound_symbol;
  if (cfg.capacity_bound)
    bound_symbol = toeplitz_symbol_samples(basis_coefficients(cfg.pulse()), cfg.bound_grid);

  std::vector<TrialOutput> out(static_cast<std::size_t>(cfg.trials));
#ifdef _OPENMP
  const int nt = threads <= 0 ? omp_get_max_threads() : threads;
  if (nt > 1) {
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int t = 0; t < cfg.trials; ++t)
      out[static_cast<std::size_t>(t)] =
          evaluate_trial(cfg, temporal_sq, bound_symbol, static_cast<std::uint64_t>(t));
    return out;
  }
#else
  (void)threads;
#endif
  // serial reference path
  for (int t = 0; t < cfg.trials; ++t)
    out[static_cast<std::size_t>(t)] =
        evaluate_trial(cfg, temporal_sq, bound_symbol, static_cast<std::uint64_t>(t));
  return out;
}

EnsembleResult run_ensemble(const TrialConfig& cfg, int threads) {
  bool cache_hit = false;
  const std::vector<TrialOutput> trials = run_trials(cfg, threads, &cache_hit);

  std::vector<double> rate(trials.size()), se(trials.size());
  for (std::size_t t = 0; t < trials.size(); ++t) {
    rate[t] = trials[t].rate.coding_rate;
    se[t] = trials[t].rate.se;
  }
  EnsembleResult out;
  out.mean_rate = pairwise_sum(rate) / static_cast<double>(trials.size());
  const SampleStats stats = sample_stats(se);
  out.mean_se = stats.mean;
  out.std_error = stats.std_error;
  if (cfg.capacity_bound) {
    std::vector<double> bound(trials.size());
    for (std::size_t t = 0; t < trials.size(); ++t) bound[t] = trials[t].bound_se;
    out.mean_bound_se = pairwise_sum(bound) / static_cast<double>(trials.size());
  }
  out.trials_used = cfg.trials;
  out.cache_hit = cache_hit;
  return out;
}

}  // namespace ftn
