#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sroabp/scalar.hpp"

namespace sroabp {

/// Dense univariate polynomial c_0 + c_1 x + ... ; trailing zeros are trimmed
/// so the default value is the zero polynomial.
template <class S>
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Univariate(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }
  Univariate(const S& constant) : c_{constant} { trim(); }  // NOLINT: scalars embed

  const std::vector<S>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree, with 0 for the zero polynomial.
  unsigned degree() const { return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1); }
  S coeff(std::size_t j) const { return j < c_.size() ? c_[j] : S(0); }

  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + T(to_scalar<T>(c_[k]));
    return acc;
  }

  Univariate operator+(const Univariate& o) const {
    std::vector<S> r(std::max(c_.size(), o.c_.size()), S(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = r[k] + c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] = r[k] + o.c_[k];
    return Univariate(std::move(r));
  }
  Univariate operator-(const Univariate& o) const {
    std::vector<S> r(std::max(c_.size(), o.c_.size()), S(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = r[k] + c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] = r[k] - o.c_[k];
    return Univariate(std::move(r));
  }
  Univariate operator*(const Univariate& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<S> r(c_.size() + o.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Univariate(std::move(r));
  }
  Univariate scaled(const S& s) const {
    std::vector<S> r(c_);
    for (auto& x : r) x = x * s;
    return Univariate(std::move(r));
  }

  bool operator==(const Univariate& o) const { return c_ == o.c_; }

 private:
  template <class T>
  static T to_scalar(const S& c) {
    if constexpr (std::is_same_v<T, S>) {
      return c;
    } else {
      return T(to_complex(c));
    }
  }
  void trim() {
    while (!c_.empty() && sroabp::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

inline Univariate<ComplexF> to_complex(const Univariate<Rational>& u) {
  std::vector<ComplexF> c;
  for (const auto& x : u.coeffs()) c.push_back(to_complex(x));
  return Univariate<ComplexF>(std::move(c));
}

}  // namespace sroabp
