#pragma once

// Independent brute-force oracles used by the tests. None of these call the
// library routine they check.

#include <cstdint>
#include <functional>
#include <vector>

#include "sroabp/poly.hpp"

namespace oracle {

using sroabp::ComplexF;
using sroabp::Monomial;
using sroabp::Poly;
using sroabp::Rational;

/// Sum over all size-d subsets S of [n] of prod_{i in S} x_i, by bitmask.
inline Poly<Rational> esym(std::size_t n, unsigned d) {
  Poly<Rational> p(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != d) continue;
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) m[i] = 1;
    p.add_term(m, Rational(1));
  }
  return p;
}

inline mpz_class fact(unsigned k) {
  mpz_class f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

/// (x_1 + ... + x_n)^d via the multinomial theorem with its own exponent walk.
inline Poly<Rational> power_sum(std::size_t n, unsigned d) {
  Poly<Rational> p(n);
  std::vector<unsigned> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      e[i] = left;
      mpz_class den = 1;
      for (auto x : e) den *= fact(x);
      Rational c(fact(d), den);
      c.canonicalize();
      p.add_term(Monomial(e), c);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n == 0) return d == 0 ? Poly<Rational>::constant(0, Rational(1)) : p;
  rec(0, d);
  return p;
}

/// prod_i (x_i + y_i) with x_i = variable i and y_i = variable n + i.
inline Poly<Rational> paired_product(std::size_t n) {
  Poly<Rational> p = Poly<Rational>::constant(2 * n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    p = p * (Poly<Rational>::variable(2 * n, i) + Poly<Rational>::variable(2 * n, n + i));
  return p;
}

/// (D_h t^e)(alpha) = sum_a h_a prod_i e_i!/(e_i - a_i)! alpha_i^{e_i - a_i}.
inline ComplexF derivative_at(const Poly<ComplexF>& h, const Monomial& e, const std::vector<ComplexF>& alpha) {
  ComplexF acc = 0.0;
  for (const auto& [a, c] : h.terms()) {
    ComplexF term = c;
    for (std::size_t i = 0; i < e.nvars(); ++i) {
      if (a[i] > e[i]) {
        term = 0.0;
        break;
      }
      for (unsigned k = 0; k < a[i]; ++k) term *= static_cast<double>(e[i] - k);
      for (unsigned k = 0; k < e[i] - a[i]; ++k) term *= alpha[i];
    }
    acc += term;
  }
  return acc;
}

/// Rank over Q by plain fraction Gaussian elimination on a copy.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
