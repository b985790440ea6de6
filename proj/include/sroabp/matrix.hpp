#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sroabp/errors.hpp"
#include "sroabp/scalar.hpp"

namespace sroabp {

/// Dense row-major matrix over a scalar ring S. S only needs value
/// initialization to zero, +, - and *.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S{}) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data length mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const S> data() const { return data_; }
  std::span<const S> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool operator==(const Matrix& o) const = default;

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const S& a = (*this)(i, k);
        if (a == S{}) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
      }
    return r;
  }
  Matrix scaled(const S& s) const {
    Matrix r(*this);
    for (auto& x : r.data_) x = x * s;
    return r;
  }
  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == S{})) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Row vector times matrix.
template <class S>
std::vector<S> vec_mat(std::span<const S> v, const Matrix<S>& m) {
  if (v.size() != m.rows()) throw DimensionError("vector-matrix shape mismatch");
  std::vector<S> out(m.cols(), S{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == S{}) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[i] * m(i, j);
  }
  return out;
}

template <class S>
S dot(std::span<const S> a, std::span<const S> b) {
  if (a.size() != b.size()) throw DimensionError("dot product length mismatch");
  S acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * b[i];
  return acc;
}

inline Matrix<ComplexF> to_complex(const Matrix<Rational>& m) {
  Matrix<ComplexF> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_complex(m(i, j));
  return out;
}

}  // namespace sroabp
