#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ftn {

/// Transmit pulse and receive basis parameters: symbol period T, acceleration
/// factor delta (one pulse every delta*T seconds, delta=1 is Nyquist
/// signaling), raised-cosine roll-off beta, and half_width = number of
/// one-sided projection taps kept.
struct PulseSpec {
  double symbol_period = 0.01;
  double delta = 0.67;
  double beta = 0.5;
  int half_width = 10;

  void validate() const;  // throws std::invalid_argument
};

/// Projection of the unit-energy pulse onto the delta*T-spaced orthonormal
/// sinc basis. taps[half_width + l] is the coefficient at shift l, l = -L..L;
/// the vector is real and symmetric.
struct PulseCoeffs {
  std::vector<double> taps;
  int half_width = 0;
  double captured_energy = 0.0;   ///< sum of squared kept taps
  double in_band_energy = 0.0;    ///< pulse energy inside the basis band (<= 1)
  double discarded_energy = 0.0;  ///< energy missing from the kept taps, relative to in-band

  double tap(int l) const { return taps[static_cast<std::size_t>(half_width + l)]; }
};

/// Banded (N+2L) x N convolution operator mapping N transmit symbols to the
/// N+2L matched-filter samples. Column j is the tap vector shifted down by j
/// rows; only the taps and dimensions are stored.
struct IsiMatrix {
  std::vector<double> taps;
  int half_width = 0;
  int cols = 0;

  int rows() const { return cols + 2 * half_width; }
  double entry(int i, int j) const {  // 0-based
    const int l = i - j - half_width;
    return (l < -half_width || l > half_width)
               ? 0.0
               : taps[static_cast<std::size_t>(half_width + l)];
  }
};

/// Unit-energy raised cosine in time. The removable singularities at t = 0
/// and t = +-T/(2 beta) are evaluated by their limits.
double raised_cosine(double t, const PulseSpec& spec);

/// Amplitude spectrum of the unit-energy raised cosine.
double raised_cosine_spectrum(double f, const PulseSpec& spec);

/// Frequency-domain basis projection: each tap is the integral of the pulse
/// spectrum against the basis tone over the flat basis band, via adaptive
/// Gauss-Kronrod quadrature split at the roll-off edges. Throws when the
/// quadrature error estimate exceeds 1e-10 of the coefficient scale.
PulseCoeffs basis_coefficients(const PulseSpec& spec);

IsiMatrix build_isi_matrix(const PulseCoeffs& coeffs, int n);

/// Tap autocorrelation r[k] = sum_l p_l p_{l+k}, k = 0..2L. This is the first
/// column band of the Gram matrix of the ISI operator, which is Toeplitz.
std::vector<double> tap_autocorrelation(std::span<const double> taps);

}  // namespace ftn
