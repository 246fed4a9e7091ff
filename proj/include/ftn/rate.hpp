#pragma once

#include <span>
#include <vector>

#include "ftn/channel.hpp"
#include "ftn/pulse.hpp"
#include "ftn/waterfill.hpp"

namespace ftn {

/// Standard Gaussian tail probability Q(x).
double q_function(double x);

/// Inverse of Q with |error| < 1e-9: rational initial approximation refined
/// by two Newton steps on the tail. Throws unless 0 < p < 1.
double inverse_q_function(double p);

/// Normalization of the finite-blocklength penalty term. `standard` divides
/// the dispersion (which already carries a 1/N factor) by the full
/// subchannel count D*N, exactly as the closed-form rate expression is
/// usually stated; `per_symbol` divides by the block length N only.
enum class PenaltyForm { standard, per_symbol };

/// Sum capacity of the parallel subchannels per temporal symbol:
/// (1/N) sum_i log2(1 + gain_i q_i / noise).
double sum_capacity(const ParallelChannels& ch, const PowerAllocation& alloc);

/// Channel dispersion under the same normalization:
/// ((log2 e)^2 / N) sum_i (1 - (1 + snr_i)^-2).
double sum_dispersion(const ParallelChannels& ch, const PowerAllocation& alloc);

struct CodingRate {
  double rate = 0.0;     ///< bits per channel use
  bool clamped = false;  ///< the normal approximation went negative and was clamped
};

/// Normal-approximation maximum coding rate for error probability eps at
/// block length n with d spatial modes and a 2l-sample frame overhead:
/// (n/(n+2l)) * (capacity - sqrt(V/(d n)) Qinv(eps) + log2(d n)/(2 d n)),
/// clamped at zero. The O(1/(d n)) remainder is dropped.
CodingRate max_coding_rate(double capacity, double dispersion, int block_length,
                           int spatial_count, int half_width, double eps,
                           PenaltyForm form = PenaltyForm::standard);

/// Bandwidth normalization: rate / (delta (1 + beta)), bits/s/Hz.
double spectral_efficiency(double rate, double delta, double beta);

/// One evaluated operating point.
struct RatePoint {
  double capacity = 0.0;    ///< bits, per temporal symbol
  double dispersion = 0.0;  ///< squared bits, same normalization
  double coding_rate = 0.0; ///< bits per channel use
  double se = 0.0;          ///< bits/s/Hz
  bool clamped = false;
};

RatePoint evaluate_rate(const ParallelChannels& ch, const PowerAllocation& alloc,
                        double eps, double beta,
                        PenaltyForm form = PenaltyForm::standard);

/// Toeplitz symbol of the ISI Gram operator sampled at grid points
/// 2 pi j / grid on [0, 2 pi), clamped at zero. These are the squared
/// temporal gains of the infinite-block-length problem.
std::vector<double> toeplitz_symbol_samples(const PulseCoeffs& coeffs, int grid);

struct CapacityBound {
  double per_channel_use = 0.0;
  double per_s_hz = 0.0;
  bool grid_converged = true;  ///< halving the grid moved the result by < 1e-4
};

/// Infinite-block-length capacity: the finite temporal spectrum is replaced
/// by symbol samples on a frequency grid and water-filled exactly like the
/// finite problem (the sum capacity at block length `grid` equals the grid
/// average). Requires grid >= 256.
CapacityBound capacity_limit(const PulseCoeffs& coeffs, std::span<const double> spatial,
                             const PulseSpec& spec, double budget, double noise_power,
                             int grid = 4096);

}  // namespace ftn
