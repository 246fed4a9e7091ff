#include "ftn/rate.hpp"

#include <cmath>
#include <stdexcept>

#include "ftn/summation.hpp"

namespace ftn {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLog2E = 1.4426950408889634074;
constexpr double kPi = 3.14159265358979323846;

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

// Acklam's rational approximation to the standard normal quantile,
// |relative error| < 1.15e-9 on its own.
double normal_quantile(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double inverse_q_function(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("inverse_q_function: probability must lie in (0,1)");
  // Q(x) = p <=> Phi(-x) = p; evaluating the quantile at p keeps the
  // rational approximation in its well-conditioned lower-tail branch.
  double x = -normal_quantile(p);
  for (int it = 0; it < 2; ++it) x += (q_function(x) - p) / normal_pdf(x);
  return x;
}

double sum_capacity(const ParallelChannels& ch, const PowerAllocation& alloc) {
  std::vector<double> terms(alloc.symbol_power.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    terms[i] = std::log1p(ch.gain[i] * alloc.symbol_power[i] / ch.noise_power) / kLn2;
  return pairwise_sum(terms) / static_cast<double>(ch.block_length);
}

double sum_dispersion(const ParallelChannels& ch, const PowerAllocation& alloc) {
  std::vector<double> terms(alloc.symbol_power.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const double snr = ch.gain[i] * alloc.symbol_power[i] / ch.noise_power;
    const double s = 1.0 + snr;
    terms[i] = snr * (snr + 2.0) / (s * s);  // = 1 - (1+snr)^-2 without cancellation
  }
  return kLog2E * kLog2E * pairwise_sum(terms) / static_cast<double>(ch.block_length);
}

CodingRate max_coding_rate(double capacity, double dispersion, int block_length,
                           int spatial_count, int half_width, double eps,
                           PenaltyForm form) {
  if (block_length < 1 || spatial_count < 1 || half_width < 1)
    throw std::invalid_argument("max_coding_rate: dimensions must be positive");
  const double dn = static_cast<double>(spatial_count) * block_length;
  const double denom = form == PenaltyForm::standard ? dn : static_cast<double>(block_length);
  const double penalty = std::sqrt(dispersion / denom) * inverse_q_function(eps);
  const double third_order = std::log2(dn) / (2.0 * dn);
  const double prefactor =
      static_cast<double>(block_length) / (block_length + 2.0 * half_width);
  const double raw = prefactor * (capacity - penalty + third_order);
  if (raw < 0.0) return {0.0, true};
  return {raw, false};
}

double spectral_efficiency(double rate, double delta, double beta) {
  return rate / (delta * (1.0 + beta));
}

RatePoint evaluate_rate(const ParallelChannels& ch, const PowerAllocation& alloc,
                        double eps, double beta, PenaltyForm form) {
  RatePoint out;
  out.capacity = sum_capacity(ch, alloc);
  out.dispersion = sum_dispersion(ch, alloc);
  const CodingRate r = max_coding_rate(out.capacity, out.dispersion, ch.block_length,
                                       ch.spatial_count, ch.half_width, eps, form);
  out.coding_rate = r.rate;
  out.clamped = r.clamped;
  out.se = spectral_efficiency(out.coding_rate, ch.delta, beta);
  return out;
}

std::vector<double> toeplitz_symbol_samples(const PulseCoeffs& coeffs, int grid) {
  const std::vector<double> band = tap_autocorrelation(coeffs.taps);
  std::vector<double> f(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    const double omega = 2.0 * kPi * j / grid;
    double s = band[0];
    for (std::size_t k = 1; k < band.size(); ++k) s += 2.0 * band[k] * std::cos(k * omega);
    f[static_cast<std::size_t>(j)] = std::max(0.0, s);
  }
  return f;
}

CapacityBound capacity_limit(const PulseCoeffs& coeffs, std::span<const double> spatial,
                             const PulseSpec& spec, double budget, double noise_power,
                             int grid) {
  if (grid < 256) throw std::invalid_argument("capacity_limit: grid must be at least 256");
  auto evaluate = [&](int g) {
    const std::vector<double> symbol = toeplitz_symbol_samples(coeffs, g);
    const ParallelChannels ch = combine_from_gains(spatial, symbol, spec, g, noise_power);
    const PowerAllocation alloc = waterfill(ch, budget);
    return sum_capacity(ch, alloc);
  };
  CapacityBound out;
  out.per_channel_use = evaluate(grid);
  out.grid_converged = std::abs(out.per_channel_use - evaluate(grid / 2)) < 1e-4;
  out.per_s_hz = spectral_efficiency(out.per_channel_use, spec.delta, spec.beta);
  return out;
}

}  // namespace ftn
