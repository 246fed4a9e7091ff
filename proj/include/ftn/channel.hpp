#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "ftn/pulse.hpp"

namespace ftn {

/// Quasi-static MIMO fading draw: rx x tx matrix with i.i.d. circularly
/// symmetric complex Gaussian entries of variance 1/tx (each receive antenna
/// sees unit average power). Entries are drawn row by row, two standard
/// normals per entry, so the draw is a pure function of the seed.
Eigen::MatrixXcd generate_channel(int tx, int rx, std::uint64_t seed);

/// Singular values of the two factors of the composite space-time channel.
struct SingularSpectrum {
  std::vector<double> spatial;   ///< singular values of the fading matrix, descending, min(tx,rx) of them
  std::vector<double> temporal;  ///< singular values of the ISI operator, descending, N of them
};

/// Spatial spectrum via dense SVD of the small fading matrix; temporal
/// spectrum via the banded eigenvalues of the ISI Gram matrix (the operator
/// itself is never decomposed densely).
SingularSpectrum singular_spectrum(const Eigen::MatrixXcd& channel, const IsiMatrix& isi);

/// The composite channel reduced to D*N parallel complex Gaussian
/// subchannels. Subchannel i = d*N + n pairs spatial mode d = floor(i/N) with
/// temporal mode n = i mod N: its power gain is (spatial[d]*temporal[n])^2 and
/// its cost weight temporal[n]^2/(N delta T) prices a unit of symbol power in
/// the transmit-power constraint. The rx*(N+2L) - D*N remaining output
/// dimensions carry no signal and are dropped here.
struct ParallelChannels {
  std::vector<double> gain;          ///< D*N power gains
  std::vector<double> cost;          ///< D*N cost weights
  std::vector<double> spatial_gain;  ///< squared spatial singular values, descending
  std::vector<double> temporal_gain; ///< squared temporal singular values, descending
  double noise_power = 1.0;
  int block_length = 0;   ///< N
  int spatial_count = 0;  ///< D = min(tx, rx)
  int half_width = 0;     ///< L; the receive frame spans N + 2L samples
  double delta = 1.0;
  double symbol_period = 1.0;

  int count() const { return block_length * spatial_count; }
};

ParallelChannels combine(const SingularSpectrum& spectrum, const PulseSpec& spec,
                         int block_length, double noise_power);

/// Same combination from explicit squared temporal gains; used by the
/// Toeplitz-symbol capacity grid, where the "temporal modes" are frequency
/// samples rather than finite-N singular values.
ParallelChannels combine_from_gains(std::span<const double> spatial,
                                    std::span<const double> temporal_sq,
                                    const PulseSpec& spec, int block_length,
                                    double noise_power);

Eigen::MatrixXd dense_isi(const IsiMatrix& isi);

}  // namespace ftn
