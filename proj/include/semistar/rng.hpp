//
// semistar - finite semigroup representation analysis
//
// Seeded random matrices.  Gaussians are drawn by Box-Muller on raw
// mt19937_64 output so that a given seed reproduces the same stream on any
// platform (std::normal_distribution is implementation-defined).
//

#ifndef SEMISTAR_RNG_HPP_
#define SEMISTAR_RNG_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace semistar {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // in [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    const double u = 1.0 - uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u))
           * std::cos(2.0 * std::numbers::pi * v);
  }

  std::uint64_t next() { return engine_(); }

  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  std::complex<double> complex_gaussian() {
    return {gaussian(), gaussian()};
  }

  Eigen::MatrixXcd gaussian_matrix(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        m(i, j) = complex_gaussian();
      }
    }
    return m;
  }

  Eigen::MatrixXcd hermitian_matrix(int n) {
    Eigen::MatrixXcd m = gaussian_matrix(n, n);
    return 0.5 * (m + m.adjoint());
  }

  // Haar-ish unitary: QR of a complex Gaussian with phase fix.
  Eigen::MatrixXcd unitary_matrix(int n) {
    const Eigen::MatrixXcd g = gaussian_matrix(n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
      const std::complex<double> d = r(j, j);
      if (std::abs(d) > 0) {
        q.col(j) *= d / std::abs(d);
      }
    }
    return q;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace semistar

#endif  // SEMISTAR_RNG_HPP_
