#include "ftn/pulse.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace ftn {
namespace {

constexpr double kPi = 3.14159265358979323846;

double sinc(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - kPi * kPi * x * x / 6.0;
  return std::sin(kPi * x) / (kPi * x);
}

struct Quad {
  double value = 0.0;
  double error = 0.0;
};

template <typename F>
Quad integrate_segments(F&& f, const std::vector<double>& knots) {
  Quad out;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (!(knots[i + 1] > knots[i])) continue;
    double err = 0.0;
    out.value += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, knots[i], knots[i + 1], 15, 1e-13, &err);
    out.error += err;
  }
  return out;
}

}  // namespace

void PulseSpec::validate() const {
  if (!(symbol_period > 0.0))
    throw std::invalid_argument("pulse: symbol period must be positive");
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("pulse: acceleration factor must lie in (0,1]");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("pulse: roll-off must lie in [0,1]");
  if (half_width < 1)
    throw std::invalid_argument("pulse: need at least one side tap");
}

double raised_cosine(double t, const PulseSpec& spec) {
  spec.validate();
  const double T = spec.symbol_period;
  const double beta = spec.beta;
  const double norm = std::sqrt(T * (1.0 - beta / 4.0));
  const double x = t / T;
  if (beta == 0.0) return sinc(x) / norm;
  const double u = 2.0 * beta * x;
  const double den = 1.0 - u * u;
  if (std::abs(den) < 1e-9) {
    // limit at t = +-T/(2 beta)
    return (kPi / 4.0) * sinc(1.0 / (2.0 * beta)) / norm;
  }
  return sinc(x) * std::cos(kPi * beta * x) / (den * norm);
}

double raised_cosine_spectrum(double f, const PulseSpec& spec) {
  const double T = spec.symbol_period;
  const double beta = spec.beta;
  const double norm = std::sqrt(T * (1.0 - beta / 4.0));
  const double af = std::abs(f);
  const double f1 = (1.0 - beta) / (2.0 * T);
  const double f2 = (1.0 + beta) / (2.0 * T);
  if (af <= f1) return T / norm;
  if (af >= f2) return 0.0;
  const double c = std::cos(kPi * T * (af - f1) / (2.0 * beta));
  return T * c * c / norm;
}

PulseCoeffs basis_coefficients(const PulseSpec& spec) {
  spec.validate();
  const double step = spec.delta * spec.symbol_period;
  const double basis_edge = 1.0 / (2.0 * step);
  const double f1 = (1.0 - spec.beta) / (2.0 * spec.symbol_period);
  const double f2 = (1.0 + spec.beta) / (2.0 * spec.symbol_period);
  const double hi = std::min(basis_edge, f2);

  // The spectrum is flat below f1 and a squared cosine between f1 and f2;
  // splitting there keeps every segment smooth.
  std::vector<double> knots{0.0};
  if (f1 > 0.0 && f1 < hi) knots.push_back(f1);
  knots.push_back(hi);

  const int L = spec.half_width;
  PulseCoeffs out;
  out.half_width = L;
  out.taps.assign(2 * static_cast<std::size_t>(L) + 1, 0.0);
  const double scale = 2.0 * std::sqrt(step);
  for (int l = 0; l <= L; ++l) {
    auto integrand = [&](double f) {
      return raised_cosine_spectrum(f, spec) * std::cos(2.0 * kPi * f * l * step);
    };
    const Quad q = integrate_segments(integrand, knots);
    if (q.error > 1e-10 * std::max(1.0, std::abs(q.value)))
      throw std::runtime_error("basis_coefficients: quadrature did not converge");
    // cosine kernel is even in l, so the taps are symmetric by construction
    out.taps[static_cast<std::size_t>(L + l)] = scale * q.value;
    out.taps[static_cast<std::size_t>(L - l)] = scale * q.value;
  }

  auto energy_density = [&](double f) {
    const double a = raised_cosine_spectrum(f, spec);
    return a * a;
  };
  const Quad e = integrate_segments(energy_density, knots);
  if (e.error > 1e-10)
    throw std::runtime_error("basis_coefficients: energy quadrature did not converge");
  out.in_band_energy = 2.0 * e.value;

  double captured = 0.0;
  for (double p : out.taps) captured += p * p;
  out.captured_energy = captured;
  out.discarded_energy = (out.in_band_energy - captured) / out.in_band_energy;
  return out;
}

IsiMatrix build_isi_matrix(const PulseCoeffs& coeffs, int n) {
  if (n < 1) throw std::invalid_argument("build_isi_matrix: need at least one column");
  return IsiMatrix{coeffs.taps, coeffs.half_width, n};
}

std::vector<double> tap_autocorrelation(std::span<const double> taps) {
  const std::size_t m = taps.size();
  std::vector<double> r(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    double s = 0.0;
    for (std::size_t l = 0; l + k < m; ++l) s += taps[l] * taps[l + k];
    r[k] = s;
  }
  return r;
}

}  // namespace ftn
