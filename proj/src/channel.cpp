#include "ftn/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftn/linalg.hpp"
#include "ftn/rng.hpp"

namespace ftn {

Eigen::MatrixXcd generate_channel(int tx, int rx, std::uint64_t seed) {
  if (tx < 1 || rx < 1) throw std::invalid_argument("generate_channel: need at least one antenna per side");
  Rng rng(seed);
  const double s = std::sqrt(1.0 / (2.0 * tx));
  Eigen::MatrixXcd h(rx, tx);
  for (int m = 0; m < rx; ++m)
    for (int k = 0; k < tx; ++k) {
      double re = 0.0, im = 0.0;
      rng.normal_pair(re, im);
      h(m, k) = std::complex<double>(s * re, s * im);
    }
  return h;
}

SingularSpectrum singular_spectrum(const Eigen::MatrixXcd& channel, const IsiMatrix& isi) {
  SingularSpectrum out;
  out.spatial = dense_singular_values(channel);  // validates finiteness, descending
  const std::vector<double> band = tap_autocorrelation(isi.taps);
  std::vector<double> eig = toeplitz_band_eigenvalues(band, isi.cols);  // ascending
  out.temporal.resize(eig.size());
  for (std::size_t i = 0; i < eig.size(); ++i)
    out.temporal[i] = std::sqrt(std::max(0.0, eig[eig.size() - 1 - i]));
  return out;
}

ParallelChannels combine_from_gains(std::span<const double> spatial,
                                    std::span<const double> temporal_sq,
                                    const PulseSpec& spec, int block_length,
                                    double noise_power) {
  spec.validate();
  if (static_cast<int>(temporal_sq.size()) != block_length)
    throw std::invalid_argument("combine: temporal spectrum does not match the block length");
  if (spatial.empty()) throw std::invalid_argument("combine: empty spatial spectrum");
  if (!(noise_power > 0.0)) throw std::invalid_argument("combine: noise power must be positive");

  ParallelChannels ch;
  ch.block_length = block_length;
  ch.spatial_count = static_cast<int>(spatial.size());
  ch.half_width = spec.half_width;
  ch.delta = spec.delta;
  ch.symbol_period = spec.symbol_period;
  ch.noise_power = noise_power;
  ch.spatial_gain.resize(spatial.size());
  for (std::size_t d = 0; d < spatial.size(); ++d)
    ch.spatial_gain[d] = spatial[d] * spatial[d];
  ch.temporal_gain.assign(temporal_sq.begin(), temporal_sq.end());

  const double cost_scale = 1.0 / (block_length * spec.delta * spec.symbol_period);
  ch.gain.resize(ch.count());
  ch.cost.resize(ch.count());
  for (int d = 0; d < ch.spatial_count; ++d)
    for (int n = 0; n < block_length; ++n) {
      const std::size_t i = static_cast<std::size_t>(d) * block_length + n;
      ch.gain[i] = ch.spatial_gain[d] * ch.temporal_gain[n];
      ch.cost[i] = ch.temporal_gain[n] * cost_scale;
    }
  return ch;
}

ParallelChannels combine(const SingularSpectrum& spectrum, const PulseSpec& spec,
                         int block_length, double noise_power) {
  std::vector<double> temporal_sq(spectrum.temporal.size());
  for (std::size_t n = 0; n < temporal_sq.size(); ++n)
    temporal_sq[n] = spectrum.temporal[n] * spectrum.temporal[n];
  return combine_from_gains(spectrum.spatial, temporal_sq, spec, block_length, noise_power);
}

Eigen::MatrixXd dense_isi(const IsiMatrix& isi) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(isi.rows(), isi.cols);
  for (int i = 0; i < isi.rows(); ++i)
    for (int j = 0; j < isi.cols; ++j) p(i, j) = isi.entry(i, j);
  return p;
}

}  // namespace ftn
