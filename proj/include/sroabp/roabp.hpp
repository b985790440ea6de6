#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sroabp/errors.hpp"
#include "sroabp/matrix.hpp"
#include "sroabp/poly.hpp"
#include "sroabp/univariate.hpp"

namespace sroabp {

/// Expansion guard: (d+1)^n may not exceed this.
inline constexpr double kExpandGuard = 1e6;

/// General read-once oblivious ABP: u^T M_0(x_{order[0]}) ... M_{n-1}(x_{order[n-1]}) c.
struct Roabp {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<std::size_t> order;
  std::vector<Matrix<Univariate<Rational>>> layers;
  std::vector<Rational> u;
  std::vector<Rational> c;

  /// Checks shapes, the permutation and entry degrees; throws DimensionError.
  void validate() const;

  template <class T>
  T eval(std::span<const T> point) const;
};

/// Commutative ROABP in coefficient form: F(x) = prod_i sum_j A[i][j] x_i^j,
/// output b^T F(x) c. All coefficient matrices commute pairwise.
class CommRoabp {
 public:
  CommRoabp() = default;
  /// Validates shapes and commutativity; throws DimensionError or
  /// NonCommutingError.
  CommRoabp(std::size_t n, unsigned d, std::size_t w, std::vector<std::vector<Matrix<Rational>>> a,
            std::vector<Rational> b, std::vector<Rational> c);

  std::size_t n() const { return n_; }
  unsigned d() const { return d_; }
  std::size_t w() const { return w_; }
  const Matrix<Rational>& coeff(std::size_t i, unsigned j) const { return a_[i][j]; }
  const std::vector<std::vector<Matrix<Rational>>>& coeffs() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }
  const std::vector<Rational>& c() const { return c_; }

  template <class T>
  T eval(std::span<const T> point) const;

 private:
  std::size_t n_ = 0;
  unsigned d_ = 0;
  std::size_t w_ = 0;
  std::vector<std::vector<Matrix<Rational>>> a_;
  std::vector<Rational> b_, c_;
};

/// Diagonal ROABP as a weighted sum of products of univariates:
/// sum_j weights[j] prod_i rows[j][i](x_i).
template <class S>
struct DiagRoabp {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<std::vector<Univariate<S>>> rows;
  std::vector<S> weights;

  std::size_t w() const { return rows.size(); }
  void validate() const {
    if (weights.size() != rows.size()) throw DimensionError("diagonal ROABP: weights/rows mismatch");
    for (const auto& r : rows) {
      if (r.size() != n) throw DimensionError("diagonal ROABP: row length differs from n");
      for (const auto& f : r)
        if (f.degree() > d) throw DimensionError("diagonal ROABP: entry degree exceeds d");
    }
  }

  template <class T>
  T eval(std::span<const T> point) const {
    if (point.size() != n) throw DimensionError("evaluation point length mismatch");
    T acc(0);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      T prod = scalar_cast<T>(weights[j]);
      for (std::size_t i = 0; i < n && !sroabp::is_zero(prod); ++i)
        prod = prod * rows[j][i].template eval<T>(point[i]);
      acc = acc + prod;
    }
    return acc;
  }
};

struct NisanProfile {
  std::vector<std::size_t> order;
  std::vector<std::size_t> ranks;  // one per prefix cut 1..n-1
  std::size_t size = 0;            // sum of ranks
  std::size_t width = 0;           // max of ranks
};

// ---- expansion ----

Poly<Rational> expand(const Roabp& r);
Poly<Rational> expand(const CommRoabp& r);
Poly<Rational> expand(const DiagRoabp<Rational>& r);
Poly<ComplexF> expand(const DiagRoabp<ComplexF>& r);

// ---- Nisan characterization ----

/// Exact ranks of the prefix/suffix coefficient matrices of f under `order`.
NisanProfile nisan_profile(const Poly<Rational>& f, std::span<const std::size_t> order);

// ---- constructions ----

/// ESym^d_n as a width d+1 commutative ROABP with layers I + A x_i.
CommRoabp construct_esym_comm(std::size_t n, unsigned d);

/// ESym^d_n as a width n+1 diagonal ROABP; nodes default to 0..n.
DiagRoabp<Rational> construct_esym_diag(std::size_t n, unsigned d,
                                        std::optional<std::vector<Rational>> nodes = std::nullopt);

/// (x_1 + ... + x_n)^d as a width d+1 commutative ROABP with coefficient
/// matrices A^j / j!.
CommRoabp construct_power_comm(std::size_t n, unsigned d);

/// (x_1 + ... + x_n)^d as a width nd+1 diagonal ROABP; nodes default to 0..nd.
DiagRoabp<Rational> construct_power_diag(std::size_t n, unsigned d,
                                         std::optional<std::vector<Rational>> nodes = std::nullopt);

// ---- curve form of a diagonal ROABP ----

/// f(x) = sum over nodes s of prod_i G_i(s, x_i). Each factor is a Poly in
/// two variables (t, x).
template <class S>
struct DiagCurveForm {
  std::vector<Poly<S>> factors;
  std::vector<S> nodes;

  template <class T>
  T eval(std::span<const T> point) const {
    if (point.size() != factors.size()) throw DimensionError("evaluation point length mismatch");
    T acc(0);
    for (const auto& s : nodes) {
      T prod(1);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::vector<T> tx{scalar_cast<T>(s), point[i]};
        prod = prod * factors[i].eval(std::span<const T>(tx));
      }
      acc = acc + prod;
    }
    return acc;
  }
};

DiagCurveForm<Rational> to_curve_form(const DiagRoabp<Rational>& r);

// ---- conversions ----

Roabp to_roabp(const CommRoabp& r);
Roabp to_roabp(const DiagRoabp<Rational>& r);
CommRoabp to_comm(const DiagRoabp<Rational>& r);
/// Throws NonCommutingError if the layer coefficient matrices do not commute
/// or are not all square of one size.
CommRoabp to_comm(const Roabp& r);

/// Commutativity of a family of square matrices; throws DimensionError on
/// mixed shapes.
bool check_commuting(std::span<const Matrix<Rational>> mats);

// ---- template definitions ----

template <class T>
T Roabp::eval(std::span<const T> point) const {
  if (point.size() != n) throw DimensionError("evaluation point length mismatch");
  std::vector<T> v;
  v.reserve(u.size());
  for (const auto& x : u) v.push_back(T(scalar_cast<T>(x)));
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& layer = layers[i];
    const T& xi = point[order[i]];
    std::vector<T> next(layer.cols(), T(0));
    for (std::size_t a = 0; a < layer.rows(); ++a) {
      if (sroabp::is_zero(v[a])) continue;
      for (std::size_t b = 0; b < layer.cols(); ++b) {
        if (layer(a, b).is_zero()) continue;
        next[b] = next[b] + v[a] * layer(a, b).template eval<T>(xi);
      }
    }
    v = std::move(next);
  }
  T acc(0);
  for (std::size_t k = 0; k < c.size(); ++k) acc = acc + v[k] * T(scalar_cast<T>(c[k]));
  return acc;
}

template <class T>
T CommRoabp::eval(std::span<const T> point) const {
  if (point.size() != n_) throw DimensionError("evaluation point length mismatch");
  std::vector<T> v;
  for (const auto& x : b_) v.push_back(T(scalar_cast<T>(x)));
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<T> next(w_, T(0));
    T xp(1);
    for (unsigned j = 0; j <= d_; ++j) {
      const auto& m = a_[i][j];
      for (std::size_t r = 0; r < w_; ++r) {
        if (sroabp::is_zero(v[r])) continue;
        const T vr = v[r] * xp;
        for (std::size_t s = 0; s < w_; ++s)
          if (!sroabp::is_zero(m(r, s))) next[s] = next[s] + vr * T(scalar_cast<T>(m(r, s)));
      }
      xp = xp * point[i];
    }
    v = std::move(next);
  }
  T acc(0);
  for (std::size_t k = 0; k < w_; ++k) acc = acc + v[k] * T(scalar_cast<T>(c_[k]));
  return acc;
}

}  // namespace sroabp
