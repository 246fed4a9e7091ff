#pragma once

#include <filesystem>
#include <vector>

namespace ftn {

/// Cache key for the temporal singular spectrum. The symbol period does not
/// enter: the projection taps are invariant to the absolute time scale, so
/// spectra are cached per normalized key.
struct SpectrumKey {
  int block_length = 0;
  double delta = 1.0;
  double beta = 0.0;
  int half_width = 10;
};

struct CachedSpectrum {
  std::vector<double> temporal;  ///< singular values, descending
  bool cache_hit = false;
  bool recovered = false;  ///< an on-disk entry was corrupt and has been rewritten
};

/// FTN_MCCR_CACHE_DIR if set, otherwise ".ftn-mccr-cache" under the current
/// working directory.
std::filesystem::path cache_directory();

/// Computes the spectrum directly (no cache involved).
std::vector<double> compute_temporal_spectrum(const SpectrumKey& key);

/// Returns the spectrum for the key, loading from disk when a valid entry
/// exists and computing + persisting it otherwise. Entries carry the key, a
/// content hash and the Gram-trace identity sum(sigma^2) = N * r0; a file
/// failing any check is recomputed and atomically replaced.
CachedSpectrum temporal_spectrum(const SpectrumKey& key);

}  // namespace ftn
