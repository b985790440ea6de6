#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sroabp/scalar.hpp"

namespace sroabp {

/// Exponent vector of a monomial t^e; its length is the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}
  Monomial(std::initializer_list<unsigned> exps) : e_(exps) {}

  static Monomial unit(std::size_t nvars, std::size_t var, unsigned power = 1) {
    Monomial m(nvars);
    m.e_[var] = power;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e_) d += x;
    return d;
  }
  bool is_one() const { return degree() == 0; }

  /// Componentwise this <= o.
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  /// Quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> e_;
};

enum class MonomialOrder {
  /// Total degree first; ties broken lexicographically with the LAST variable
  /// most significant, so t1 < t2 < ... < tr in degree one.
  kGradedLex,
  /// Pure lexicographic: the smallest index where the exponents differ
  /// decides, smaller exponent means smaller monomial.
  kLex,
};

bool graded_lex_less(const Monomial& a, const Monomial& b);
bool lex_less(const Monomial& a, const Monomial& b);
bool monomial_less(MonomialOrder order, const Monomial& a, const Monomial& b);

struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

/// All monomials of total degree exactly `degree` in ascending graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// All monomials e <= bound componentwise, ascending graded-lex.
std::vector<Monomial> monomials_in_box(const std::vector<unsigned>& bound);

/// Product of e_i! over the exponents.
template <class S>
S monomial_factorial(const Monomial& m) {
  S f(1);
  for (auto e : m.exponents()) f = f * factorial<S>(e);
  return f;
}
}  // namespace sroabp
