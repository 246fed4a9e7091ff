// Timing comparison of the parallel kernels against their serial reference
// paths: the Monte Carlo trial loop (OpenMP vs plain loop) and the banded
// temporal eigensolver (banded LAPACK vs dense reference).

#include <chrono>
#include <cstdio>


#ifdef _OPENMP
#include <omp.h>
#endif

#include "ftn/ensemble.hpp"
#include "ftn/linalg.hpp"
#include "ftn/pulse.hpp"
#include "ftn/spectrum_cache.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n_spec = 1200;
  int trials = 400;
  if (argc > 1) n_spec = std::atoi(argv[1]);
  if (argc > 2) trials = std::atoi(argv[2]);

#ifdef _OPENMP
  const int hw = omp_get_max_threads();
#else
  const int hw = 1;
#endif
  std::printf("threads available: %d\n\n", hw);

  // --- temporal spectrum: banded solver vs dense reference -----------------
  ftn::PulseSpec pulse{1.0, 0.67, 0.5, 10};
  const ftn::PulseCoeffs coeffs = ftn::basis_coefficients(pulse);
  const std::vector<double> band = ftn::tap_autocorrelation(coeffs.taps);

  std::vector<double> banded, dense;
  const double t_banded = time_ms([&] { banded = ftn::toeplitz_band_eigenvalues(band, n_spec); });
  const double t_dense = time_ms([&] { dense = ftn::dense_toeplitz_eigenvalues(band, n_spec); });
  double max_diff = 0.0;
  for (int i = 0; i < n_spec; ++i)
    max_diff = std::max(max_diff, std::abs(banded[i] - dense[i]));
  std::printf("temporal spectrum, N=%d:\n", n_spec);
  std::printf("  banded solver   %10.1f ms\n", t_banded);
  std::printf("  dense reference %10.1f ms   (x%.1f)\n", t_dense, t_dense / t_banded);
  std::printf("  max |diff|      %10.2e\n\n", max_diff);

  // --- Monte Carlo ensemble: OpenMP kernel vs serial reference -------------
  ftn::TrialConfig cfg;
  cfg.block_length = 200;
  cfg.trials = trials;
  ftn::temporal_spectrum({cfg.block_length, cfg.delta, cfg.beta, cfg.half_width});  // warm cache

  std::vector<ftn::TrialOutput> serial, parallel;
  const double t_serial = time_ms([&] { serial = ftn::run_trials(cfg, 1); });
  const double t_parallel = time_ms([&] { parallel = ftn::run_trials(cfg, 0); });
  auto same = [](const ftn::TrialOutput& a, const ftn::TrialOutput& b) {
    return a.rate.capacity == b.rate.capacity && a.rate.dispersion == b.rate.dispersion &&
           a.rate.coding_rate == b.rate.coding_rate && a.rate.se == b.rate.se &&
           a.bound_se == b.bound_se;
  };
  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i)
    identical = same(serial[i], parallel[i]);

  std::printf("ensemble, N=%d, %d trials:\n", cfg.block_length, cfg.trials);
  std::printf("  serial reference %9.1f ms\n", t_serial);
  std::printf("  OpenMP kernel    %9.1f ms   (speedup x%.2f)\n", t_parallel,
              t_serial / t_parallel);
  std::printf("  bit-identical    %9s\n", identical ? "yes" : "NO");
  return identical ? 0 : 1;
}
