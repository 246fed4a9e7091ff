#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ftn/rng.hpp"
#include "ftn/waterfill.hpp"

namespace ftn::oracle {
namespace {

constexpr double kPi = 3.14159265358979323846;

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 40);
}

double projection_oracle(const PulseSpec& spec, int l) {
  spec.validate();
  const double T = spec.symbol_period;
  const double step = spec.delta * T;
  const double root = std::sqrt(step);
  auto basis = [&](double t) {
    if (std::abs(t) < 1e-12 * step) return root / step;
    return root * std::sin(kPi * t / step) / (kPi * t);
  };
  auto integrand = [&](double t) { return raised_cosine(t, spec) * basis(t - l * step); };

  // Generous tail: the raised cosine decays cubically for beta > 0, and the
  // oscillating product cancels well beyond a few hundred periods.
  const double reach = (std::abs(l) + (spec.beta > 0.05 ? 200.0 : 2000.0)) * step + 60.0 * T;
  const double seg = 0.5 * std::min(T, step);
  double sum = 0.0;
  const int half_segments = static_cast<int>(std::ceil(reach / seg));
  for (int k = -half_segments; k < half_segments; ++k)
    sum += adaptive_simpson(integrand, k * seg, (k + 1) * seg, 1e-13);
  return sum;
}

std::vector<double> waterfill_oracle(const ParallelChannels& ch, double budget) {
  const std::size_t m = ch.gain.size();
  // Channels that cannot carry rate or power are pinned at zero.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < m; ++i)
    if (ch.gain[i] > 0.0 && ch.cost[i] > 0.0) live.push_back(i);
  std::vector<double> q(m, 0.0);
  if (live.empty()) return q;

  // Work on cost-weighted spends s_i = cost_i q_i; feasible set is the
  // budget simplex {s >= 0, sum s <= budget}.
  const std::size_t k = live.size();
  std::vector<double> a(k);  // snr_i = a_i * s_i
  for (std::size_t j = 0; j < k; ++j)
    a[j] = ch.gain[live[j]] / (ch.noise_power * ch.cost[live[j]]);
  std::vector<double> s(k, budget / static_cast<double>(k));

  auto objective = [&](const std::vector<double>& spend) {
    double f = 0.0;
    for (std::size_t j = 0; j < k; ++j) f += std::log2(1.0 + a[j] * spend[j]);
    return f;
  };

  auto project = [&](std::vector<double>& spend) {
    double total = 0.0;
    for (double& v : spend) total += std::max(0.0, v);
    if (total <= budget) {
      for (double& v : spend) v = std::max(0.0, v);
      return;
    }
    double lo = 0.0, hi = 0.0;
    for (double v : spend) hi = std::max(hi, v);
    for (int it = 0; it < 100; ++it) {
      const double theta = 0.5 * (lo + hi);
      double t = 0.0;
      for (double v : spend) t += std::max(0.0, v - theta);
      (t > budget ? lo : hi) = theta;
    }
    const double theta = 0.5 * (lo + hi);
    for (double& v : spend) v = std::max(0.0, v - theta);
  };

  // Phase 1: projected gradient ascent with diminishing steps.
  constexpr double kLn2Inv = 1.4426950408889634074;
  const double step0 = budget / static_cast<double>(k);
  std::vector<double> grad(k), trial(k);
  for (int it = 1; it <= 20000; ++it) {
    for (std::size_t j = 0; j < k; ++j) grad[j] = kLn2Inv * a[j] / (1.0 + a[j] * s[j]);
    double gmax = 0.0;
    for (double g : grad) gmax = std::max(gmax, g);
    const double step = step0 / (gmax * std::sqrt(static_cast<double>(it)));
    for (std::size_t j = 0; j < k; ++j) trial[j] = s[j] + step * grad[j];
    project(trial);
    s.swap(trial);
  }

  // Phase 2: golden-section refinement of pairwise transfers. Spend the full
  // budget first; extra spend never lowers the objective.
  {
    double total = 0.0;
    for (double v : s) total += v;
    const double slack = (budget - total) / static_cast<double>(k);
    for (double& v : s) v += std::max(0.0, slack);
  }
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  auto pair_gain = [&](std::size_t i, std::size_t j, double t) {
    return std::log2(1.0 + a[i] * (s[i] + t)) + std::log2(1.0 + a[j] * (s[j] - t));
  };
  for (int sweep = 0; sweep < 200; ++sweep) {
    double improved = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        double lo = -s[i], hi = s[j];
        double x1 = hi - golden * (hi - lo), x2 = lo + golden * (hi - lo);
        double f1 = pair_gain(i, j, x1), f2 = pair_gain(i, j, x2);
        for (int it = 0; it < 90; ++it) {
          if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = pair_gain(i, j, x2);
          } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = pair_gain(i, j, x1);
          }
        }
        const double t = 0.5 * (lo + hi);
        const double before = pair_gain(i, j, 0.0);
        const double after = pair_gain(i, j, t);
        if (after > before) {
          s[i] += t;
          s[j] -= t;
          improved += after - before;
        }
      }
    if (improved < 1e-13 * (1.0 + std::abs(objective(s)))) break;
  }

  for (std::size_t j = 0; j < k; ++j) q[live[j]] = s[j] / ch.cost[live[j]];
  return q;
}

std::vector<double> kron_singular_values(const Eigen::MatrixXcd& channel,
                                         const IsiMatrix& isi) {
  const int kn = static_cast<int>(channel.cols()) * isi.cols;
  if (kn > 64) throw std::invalid_argument("kron oracle: instance too large");
  const Eigen::MatrixXd p = dense_isi(isi);
  const int rows = static_cast<int>(channel.rows()) * isi.rows();
  Eigen::MatrixXcd full(rows, kn);
  for (int m = 0; m < channel.rows(); ++m)
    for (int r = 0; r < isi.rows(); ++r)
      for (int k = 0; k < channel.cols(); ++k)
        for (int c = 0; c < isi.cols; ++c)
          full(m * isi.rows() + r, k * isi.cols + c) = channel(m, k) * p(r, c);
  return dense_singular_values(full);
}

double q_tail(double x) {
  if (x < 0.0) return 1.0 - q_tail(-x);
  const double z = x / std::sqrt(2.0);
  if (x <= 2.0) {
    // Q(x) = 1/2 - 1/sqrt(2 pi) * sum_n (-1)^n x^(2n+1) / (2^n n! (2n+1))
    double term = x;
    double sum = x;
    for (int n = 1; n < 80; ++n) {
      term *= -x * x / (2.0 * n);
      const double add = term / (2.0 * n + 1.0);
      sum += add;
      if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 0.5 - sum / std::sqrt(2.0 * kPi);
  }
  // erfc(z) = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
  // evaluated with the modified Lentz method.
  const double tiny = 1e-300;
  double f = z, c = z / tiny, d = 0.0;
  for (int n = 1; n < 400; ++n) {
    const double an = 0.5 * n;
    d = z + an * d;
    if (d == 0.0) d = tiny;
    c = z + an / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-17) break;
  }
  return 0.5 * std::exp(-z * z) / (std::sqrt(kPi) * f);
}

std::vector<double> quartic_charpoly_eigenvalues(const Eigen::Matrix4d& a) {
  // det(lambda I - A) = lambda^4 + c3 lambda^3 + c2 lambda^2 + c1 lambda + c0
  Eigen::Matrix4d m = a;
  const double c3 = -m.trace();
  m = a * (m + c3 * Eigen::Matrix4d::Identity());
  const double c2 = -m.trace() / 2.0;
  m = a * (m + c2 * Eigen::Matrix4d::Identity());
  const double c1 = -m.trace() / 3.0;
  m = a * (m + c1 * Eigen::Matrix4d::Identity());
  const double c0 = -m.trace() / 4.0;

  using C = std::complex<double>;
  auto poly = [&](C z) { return (((z + c3) * z + c2) * z + c1) * z + c0; };
  std::vector<C> roots(4);
  for (int i = 0; i < 4; ++i) roots[i] = std::pow(C(0.4, 0.9), i);
  for (int it = 0; it < 500; ++it) {
    double moved = 0.0;
    for (int i = 0; i < 4; ++i) {
      C denom(1.0, 0.0);
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const C delta = poly(roots[i]) / denom;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-15) break;
  }
  std::vector<double> out(4);
  for (int i = 0; i < 4; ++i) out[i] = roots[i].real();
  std::sort(out.begin(), out.end());
  return out;
}

RandomInstance random_instance(std::uint64_t seed, int max_spatial, int max_temporal) {
  Rng rng(seed);
  const int d = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_spatial));
  const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_temporal));

  SingularSpectrum spectrum;
  for (int i = 0; i < d; ++i) {
    double x = 0.0, y = 0.0;
    rng.normal_pair(x, y);
    spectrum.spatial.push_back(std::sqrt(x * x + y * y));
  }
  for (int i = 0; i < n; ++i) {
    const bool dead = rng.uniform() < 0.15 && n > 1;
    spectrum.temporal.push_back(dead ? 0.0 : 0.1 + 1.4 * rng.uniform());
  }
  std::sort(spectrum.spatial.rbegin(), spectrum.spatial.rend());
  std::sort(spectrum.temporal.rbegin(), spectrum.temporal.rend());

  PulseSpec pulse;
  pulse.symbol_period = 0.25 + rng.uniform();
  pulse.delta = 0.5 + 0.5 * rng.uniform();
  pulse.beta = rng.uniform();
  pulse.half_width = 1 + static_cast<int>(rng.next() % 10);

  RandomInstance out;
  out.channels = combine(spectrum, pulse, n, 0.5 + rng.uniform());
  out.budget = std::pow(10.0, -1.0 + 3.0 * rng.uniform());
  return out;
}

}  // namespace ftn::oracle
