#pragma once

// Internal conversions between sroabp::Matrix<ComplexF> and Eigen.

#include <Eigen/Dense>

#include "sroabp/matrix.hpp"

namespace sroabp::detail {

inline Eigen::MatrixXcd to_eigen(const Matrix<ComplexF>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline Matrix<ComplexF> from_eigen(const Eigen::MatrixXcd& m) {
  Matrix<ComplexF> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

/// Complex Schur form M = U T U^H with the diagonal of T grouped: entries
/// with equal `group[k]` (indexed by the original diagonal position) are made
/// contiguous, groups appearing in ascending id order. Uses adjacent unitary
/// swaps of the triangular factor.
struct OrderedSchur {
  Eigen::MatrixXcd t;
  Eigen::MatrixXcd u;
  std::vector<std::size_t> group;  // group id of each diagonal entry after reordering
};

OrderedSchur order_schur(Eigen::MatrixXcd t, Eigen::MatrixXcd u, std::vector<std::size_t> group);

}  // namespace sroabp::detail
