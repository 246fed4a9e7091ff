#include <doctest.h>

#include <cmath>

#include "ftn/linalg.hpp"
#include "ftn/rng.hpp"

using namespace ftn;

TEST_CASE("banded solver matches the dense reference on random bands") {
  Rng rng(7);
  for (int n : {1, 2, 3, 5, 8, 21, 40, 160})
    for (int b : {0, 1, 3, 8}) {
      std::vector<double> band(static_cast<std::size_t>(b) + 1);
      band[0] = 1.5 + rng.uniform();
      for (std::size_t k = 1; k < band.size(); ++k) band[k] = rng.uniform() - 0.5;
      const std::vector<double> fast = toeplitz_band_eigenvalues(band, n);
      const std::vector<double> ref = dense_toeplitz_eigenvalues(band, n);
      REQUIRE(fast.size() == static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        CHECK(fast[static_cast<std::size_t>(i)] ==
              doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-10));
    }
}

TEST_CASE("band wider than the matrix is clipped") {
  std::vector<double> band(21, 0.0);
  band[0] = 2.0;
  band[1] = -1.0;
  band[20] = 0.3;  // would index outside a 3x3 matrix
  const auto fast = toeplitz_band_eigenvalues(band, 3);
  const auto ref = dense_toeplitz_eigenvalues(band, 3);
  for (int i = 0; i < 3; ++i)
    CHECK(fast[static_cast<std::size_t>(i)] ==
          doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-12));
}

TEST_CASE("tridiagonal toeplitz eigenvalues hit the closed form") {
  // diag 2, off-diagonal -1: eigenvalues 2 - 2 cos(k pi / (n+1))
  const int n = 12;
  const std::vector<double> band{2.0, -1.0};
  const auto w = toeplitz_band_eigenvalues(band, n);
  for (int k = 1; k <= n; ++k)
    CHECK(w[static_cast<std::size_t>(k - 1)] ==
          doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-12));
}

TEST_CASE("eigenvalue sum equals the trace") {
  const std::vector<double> band{1.0, 0.4, -0.2, 0.05};
  const auto w = toeplitz_band_eigenvalues(band, 33);
  double sum = 0.0;
  for (double v : w) sum += v;
  CHECK(sum == doctest::Approx(33.0 * band[0]).epsilon(1e-12));
}

TEST_CASE("degenerate banded inputs") {
  CHECK_THROWS(toeplitz_band_eigenvalues(std::vector<double>{}, 4));
  CHECK_THROWS(toeplitz_band_eigenvalues(std::vector<double>{1.0}, 0));
  const auto w = toeplitz_band_eigenvalues(std::vector<double>{3.0}, 5);  // diagonal
  for (double v : w) CHECK(v == 3.0);
}

TEST_CASE("dense singular values") {
  CHECK(dense_singular_values(Eigen::MatrixXcd::Identity(2, 2)) ==
        std::vector<double>{1.0, 1.0});

  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = std::complex<double>(-3.0, 4.0);
  CHECK(dense_singular_values(one)[0] == doctest::Approx(5.0).epsilon(1e-14));

  Eigen::MatrixXcd bad(1, 1);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS(dense_singular_values(bad));
}
