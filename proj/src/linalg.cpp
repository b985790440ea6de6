#include "sroabp/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eigen_bridge.hpp"

namespace sroabp {

RowEchelon rref(Matrix<Rational> m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank_exact(const Matrix<Rational>& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> nullspace_exact(const Matrix<Rational>& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_exact(const Matrix<Rational>& m,
                                                 std::span<const Rational> b) {
  if (b.size() != m.rows()) throw DimensionError("solve_exact: rhs length mismatch");
  Matrix<Rational> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon e = rref(std::move(aug));
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

Matrix<Rational> inverse_exact(const Matrix<Rational>& m) {
  if (!m.is_square()) throw DomainError("inverse_exact: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<Rational> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw DomainError("inverse_exact: matrix is singular");
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

double frobenius_norm(const Matrix<ComplexF>& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<EigenPair> eigen(const Matrix<ComplexF>& m, double tol) {
  if (!m.is_square()) throw DimensionError("eigen: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return {};
  const Eigen::MatrixXcd a = detail::to_eigen(m);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a, true);
  if (solver.info() != Eigen::Success) throw NumericError("eigen: solver did not converge");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const double scale = std::max(1.0, frobenius_norm(m));

  // Single-linkage grouping of eigenvalues closer than tol * scale.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values(i) - values(j)) <= tol * scale) parent[find(i)] = find(j);

  std::vector<EigenPair> pairs;
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (std::find(seen.begin(), seen.end(), root) != seen.end()) continue;
    seen.push_back(root);
    EigenPair p;
    p.multiplicity = 0;
    ComplexF sum = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (find(k) != root) continue;
      ++p.multiplicity;
      sum += values(k);
      Eigen::VectorXcd v = vectors.col(k);
      const double nv = v.norm();
      if (nv == 0.0) continue;
      v /= nv;
      const double res = (a * v - values(k) * v).norm();
      if (res < best) {
        best = res;
        p.vector.assign(v.data(), v.data() + v.size());
      }
    }
    p.value = sum / static_cast<double>(p.multiplicity);
    p.residual = best;
    if (!(best <= tol * scale))
      throw NumericError("eigen: eigenpair residual exceeds tolerance");
    pairs.push_back(std::move(p));
  }
  return pairs;
}

SvdSummary singular_values(const Matrix<ComplexF>& m) {
  SvdSummary out;
  if (m.rows() == 0 || m.cols() == 0) return out;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m));
  const auto& s = svd.singularValues();
  out.singular_values.assign(s.data(), s.data() + s.size());
  const double smin = out.singular_values.back();
  out.condition = smin == 0.0 ? std::numeric_limits<double>::infinity()
                              : out.singular_values.front() / smin;
  if (m.rows() != m.cols()) out.condition = std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::vector<std::vector<ComplexF>> nullspace_numeric(const Matrix<ComplexF>& m, double tol, double floor) {
  const std::size_t cols = m.cols();
  std::vector<std::vector<ComplexF>> basis;
  if (cols == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<ComplexF> e(cols, 0.0);
      e[j] = 1.0;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(detail::to_eigen(m), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = std::max(s.size() > 0 ? s(0) : 0.0, floor);
  const Eigen::MatrixXcd& v = svd.matrixV();
  for (std::size_t j = 0; j < cols; ++j) {
    const double sj = static_cast<Eigen::Index>(j) < s.size() ? s(j) : 0.0;
    if (sj <= tol * smax) basis.emplace_back(v.col(j).data(), v.col(j).data() + cols);
  }
  return basis;
}

std::size_t rank_numeric(const Matrix<ComplexF>& m, double tol) {
  return m.cols() - nullspace_numeric(m, tol).size();
}

Matrix<ComplexF> inverse_numeric(const Matrix<ComplexF>& m) {
  if (!m.is_square()) throw DimensionError("inverse_numeric: matrix is not square");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(detail::to_eigen(m));
  if (!lu.isInvertible()) throw NumericError("inverse_numeric: matrix is singular");
  return detail::from_eigen(lu.inverse());
}

namespace detail {

OrderedSchur order_schur(Eigen::MatrixXcd t, Eigen::MatrixXcd u, std::vector<std::size_t> group) {
  const Eigen::Index n = t.rows();
  // Bubble sort of the diagonal by group id; each adjacent swap is a plane
  // rotation whose first column is the eigenvector of the 2x2 block for its
  // second eigenvalue.
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
      if (group[k] <= group[k + 1]) continue;
      const std::complex<double> t11 = t(k, k), t22 = t(k + 1, k + 1), t12 = t(k, k + 1);
      Eigen::Vector2cd x(t12, t22 - t11);
      const double nx = x.norm();
      if (nx > 0.0) {
        x /= nx;
        Eigen::Matrix2cd g;
        g << x(0), -std::conj(x(1)), x(1), std::conj(x(0));
        t.middleRows(k, 2) = g.adjoint() * t.middleRows(k, 2);
        t.middleCols(k, 2) = t.middleCols(k, 2) * g;
        u.middleCols(k, 2) = u.middleCols(k, 2) * g;
        t(k + 1, k) = 0.0;
      } else {
        // t11 == t22 with a zero coupling: a plain permutation.
        Eigen::Matrix2cd g;
        g << 0.0, 1.0, 1.0, 0.0;
        t.middleRows(k, 2) = g * t.middleRows(k, 2);
        t.middleCols(k, 2) = t.middleCols(k, 2) * g;
        u.middleCols(k, 2) = u.middleCols(k, 2) * g;
      }
      t(k, k) = t22;
      t(k + 1, k + 1) = t11;
      std::swap(group[k], group[k + 1]);
      swapped = true;
    }
  }
  return {std::move(t), std::move(u), std::move(group)};
}

}  // namespace detail
}  // namespace sroabp
