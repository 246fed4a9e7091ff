#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace ftn {

/// Eigenvalues (ascending) of the n x n symmetric banded Toeplitz matrix
/// whose first column is band[0], band[1], ..., zero beyond the band. Backed
/// by the LAPACK banded divide-and-conquer solver; throws on a nonzero info
/// (iteration budget exhausted).
std::vector<double> toeplitz_band_eigenvalues(std::span<const double> band, int n);

/// Dense reference path for the same spectrum (Eigen self-adjoint solver).
/// Kept for tests and the benchmark; quadratic memory, so small n only.
std::vector<double> dense_toeplitz_eigenvalues(std::span<const double> band, int n);

/// Singular values (descending) of a dense complex matrix.
std::vector<double> dense_singular_values(const Eigen::MatrixXcd& a);

}  // namespace ftn
