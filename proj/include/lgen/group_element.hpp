#pragma once

// Random gauge-group elements for numerical invariance checks.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "lgen/algebra.hpp"

namespace lgen {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// Haar-distributed element of SU(n): QR of a complex Ginibre matrix with
/// the phases of R's diagonal folded back into Q, then rescaled by the
/// n-th root of the determinant.
template <typename Scalar, typename Rng>
ComplexMatrix<Scalar> random_special_unitary(int n, Rng& rng) {
  using Complex = std::complex<Scalar>;
  std::normal_distribution<Scalar> normal(0, 1);
  ComplexMatrix<Scalar> z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(normal(rng), normal(rng));

  Eigen::HouseholderQR<ComplexMatrix<Scalar>> qr(z);
  ComplexMatrix<Scalar> q = qr.householderQ();
  const ComplexMatrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Scalar mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  const Complex det = q.determinant();
  const Complex root = std::polar(Scalar(1), -std::arg(det) / static_cast<Scalar>(n));
  return q * root;
}

/// Unit-modulus U(1) phase e^{i theta}.
template <typename Scalar, typename Rng>
std::complex<Scalar> random_phase(Rng& rng) {
  std::uniform_real_distribution<Scalar> angle(0, Scalar(2 * M_PI));
  return std::polar(Scalar(1), angle(rng));
}

/// Deterministic element for `group` given `seed`: a 3x3 or 2x2 special
/// unitary matrix, or a 1x1 matrix holding a U(1) phase.
Eigen::MatrixXcd random_group_element(GaugeGroup group, std::uint64_t seed);

}  // namespace lgen
