#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace ftn {

/// Pairwise summation: deterministic for a fixed element order (independent
/// of threading, which aggregates into the array first) and accurate on long
/// Monte Carlo arrays.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;  ///< standard error of the mean
};

inline SampleStats sample_stats(std::span<const double> v) {
  SampleStats out;
  const std::size_t n = v.size();
  if (n == 0) return out;
  out.mean = pairwise_sum(v) / static_cast<double>(n);
  if (n == 1) return out;
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = v[i] - out.mean;
    sq[i] = d * d;
  }
  const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
  out.std_error = std::sqrt(var / static_cast<double>(n));
  return out;
}

}  // namespace ftn
