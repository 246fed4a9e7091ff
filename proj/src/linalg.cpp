#include "ftn/linalg.hpp"

#include <lapacke.h>

#include <algorithm>
#include <stdexcept>

namespace ftn {

std::vector<double> toeplitz_band_eigenvalues(std::span<const double> band, int n) {
  if (n < 1) throw std::invalid_argument("toeplitz_band_eigenvalues: empty matrix");
  if (band.empty()) throw std::invalid_argument("toeplitz_band_eigenvalues: empty band");
  const int kd = std::min<int>(static_cast<int>(band.size()) - 1, n - 1);
  const int ldab = kd + 1;
  // LAPACK lower-band storage, column major: ab(i-j, j) = a(i, j)
  std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= std::min(kd, n - 1 - j); ++k)
      ab[static_cast<std::size_t>(j) * ldab + k] = band[static_cast<std::size_t>(k)];
  std::vector<double> w(static_cast<std::size_t>(n));
  double z = 0.0;
  const int info = LAPACKE_dsbevd(LAPACK_COL_MAJOR, 'N', 'L', n, kd, ab.data(),
                                  ldab, w.data(), &z, 1);
  if (info != 0)
    throw std::runtime_error("toeplitz_band_eigenvalues: solver did not converge (info=" +
                             std::to_string(info) + ")");
  return w;
}

std::vector<double> dense_toeplitz_eigenvalues(std::span<const double> band, int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(std::abs(i - j));
      if (k < band.size()) a(i, j) = band[k];
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("dense_toeplitz_eigenvalues: solver failed");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> dense_singular_values(const Eigen::MatrixXcd& a) {
  if (!a.allFinite()) throw std::invalid_argument("dense_singular_values: non-finite input");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

}  // namespace ftn
