#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sroabp/errors.hpp"
#include "sroabp/matrix.hpp"
#include "sroabp/monomial.hpp"
#include "sroabp/scalar.hpp"

namespace sroabp {

/// Sparse multivariate polynomial. Zero coefficients are never stored and
/// terms iterate in ascending graded-lex order.
template <class S>
class Poly {
 public:
  using Terms = std::map<Monomial, S, GradedLexLess>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const S& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t var) {
    Poly p(nvars);
    p.add_term(Monomial::unit(nvars, var), S(1));
    return p;
  }
  static Poly monomial(const Monomial& m, const S& c = S(1)) {
    Poly p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Monomial& m, const S& c) {
    if (m.nvars() != nvars_) throw DimensionError("monomial arity does not match polynomial");
    if (sroabp::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (sroabp::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  /// Per-variable maximum exponent.
  std::vector<unsigned> individual_degrees() const {
    std::vector<unsigned> d(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max(d[i], m[i]);
    return d;
  }

  std::optional<Monomial> leading_monomial(MonomialOrder order = MonomialOrder::kGradedLex) const {
    if (terms_.empty()) return std::nullopt;
    if (order == MonomialOrder::kGradedLex) return terms_.rbegin()->first;
    Monomial best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
      if (lex_less(best, m)) best = m;
    return best;
  }

  /// Terms sorted ascending under the requested order.
  std::vector<std::pair<Monomial, S>> sorted_terms(MonomialOrder order) const {
    std::vector<std::pair<Monomial, S>> out(terms_.begin(), terms_.end());
    if (order != MonomialOrder::kGradedLex)
      std::stable_sort(out.begin(), out.end(), [order](const auto& a, const auto& b) {
        return monomial_less(order, a.first, b.first);
      });
    return out;
  }

  Poly operator+(const Poly& o) const {
    check_arity(o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    check_arity(o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, S(0) - c);
    return r;
  }
  Poly operator-() const { return Poly(nvars_) - *this; }
  Poly operator*(const Poly& o) const {
    check_arity(o);
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  Poly scaled(const S& s) const {
    Poly r(nvars_);
    if (sroabp::is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * s);
    return r;
  }
  Poly pow(unsigned k) const {
    Poly r = constant(nvars_, S(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Value at a point; the point scalar T may differ from S (e.g. rational
  /// coefficients at a complex point).
  template <class T>
  T eval(std::span<const T> point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point length mismatch");
    // Cache powers per variable.
    std::vector<std::vector<T>> powers(nvars_);
    const auto deg = individual_degrees();
    for (std::size_t i = 0; i < nvars_; ++i) {
      powers[i].reserve(deg[i] + 1);
      powers[i].push_back(T(1));
      for (unsigned k = 1; k <= deg[i]; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    T acc(0);
    for (const auto& [m, c] : terms_) {
      T term = convert<T>(c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] != 0) term = term * powers[i][m[i]];
      acc = acc + term;
    }
    return acc;
  }
  template <class T>
  T eval(const std::vector<T>& point) const {
    return eval(std::span<const T>(point));
  }

  /// Partial derivative d_a (no factorial normalization).
  Poly derivative(const Monomial& a) const {
    if (a.nvars() != nvars_) throw DimensionError("derivative multi-index arity mismatch");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (!a.divides(m)) continue;
      S f = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (a[i] != 0) f = f * falling_factorial<S>(m[i], a[i]);
      r.add_term(m / a, f);
    }
    return r;
  }

  /// Sum of the terms of total degree exactly j.
  Poly homogeneous_component(unsigned j) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == j) r.terms_.emplace(m, c);
    return r;
  }

  /// f(mu * x).
  Poly dilate(const S& mu) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      S p(1);
      for (unsigned k = 0; k < m.degree(); ++k) p = p * mu;
      r.add_term(m, c * p);
    }
    return r;
  }

  /// g with g(y) = f(y + alpha).
  Poly translate(std::span<const S> alpha) const {
    if (alpha.size() != nvars_) throw DimensionError("translation vector length mismatch");
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      // Expand prod_i (y_i + alpha_i)^{m_i} one variable at a time.
      std::vector<std::pair<Monomial, S>> acc{{Monomial(nvars_), c}};
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        std::vector<S> apow(m[i] + 1, S(1));
        for (unsigned k = 1; k <= m[i]; ++k) apow[k] = apow[k - 1] * alpha[i];
        std::vector<std::pair<Monomial, S>> next;
        for (const auto& [mm, cc] : acc)
          for (unsigned k = 0; k <= m[i]; ++k) {
            const S f = binomial<S>(m[i], k) * apow[m[i] - k];
            if (sroabp::is_zero(f)) continue;
            Monomial nm = mm;
            nm[i] = k;
            next.emplace_back(std::move(nm), cc * f);
          }
        acc = std::move(next);
      }
      for (const auto& [mm, cc] : acc) r.add_term(mm, cc);
    }
    return r;
  }
  Poly translate(const std::vector<S>& alpha) const { return translate(std::span<const S>(alpha)); }

 private:
  template <class T>
  static T convert(const S& c) {
    if constexpr (std::is_same_v<T, S>) {
      return c;
    } else {
      return T(to_complex(c));
    }
  }
  void check_arity(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial arity mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

inline Poly<ComplexF> to_complex(const Poly<Rational>& p) {
  Poly<ComplexF> r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, to_complex(c));
  return r;
}

/// Coefficient-wise rounding to rationals with bounded denominators. Throws
/// DomainError if an imaginary part exceeds imag_tol.
Poly<Rational> rationalize(const Poly<ComplexF>& p, long max_den, double imag_tol);

/// Largest coefficient magnitude.
template <class S>
double max_abs_coeff(const Poly<S>& p) {
  double m = 0.0;
  for (const auto& [mono, c] : p.terms()) m = std::max(m, magnitude(c));
  return m;
}

/// A constant-coefficient differential operator D_h = sum_e h_e d_e.
template <class S>
struct DerivOperator {
  Poly<S> op;
};

/// D_h(g) = sum_a coeff_a(h) d_a g.
template <class S>
Poly<S> apply_operator(const DerivOperator<S>& d, const Poly<S>& g) {
  if (d.op.nvars() != g.nvars()) throw DimensionError("operator arity mismatch");
  Poly<S> r(g.nvars());
  for (const auto& [a, c] : d.op.terms()) r = r + g.derivative(a).scaled(c);
  return r;
}

/// sigma_a(D_h), realized as D over d_a(h).
template <class S>
DerivOperator<S> shift_operator(const DerivOperator<S>& d, const Monomial& a) {
  return {d.op.derivative(a)};
}

/// sum_e e! g_e h_e, which equals D_g(h)(0) = D_h(g)(0).
template <class S>
S pairing_at_zero(const Poly<S>& g, const Poly<S>& h) {
  if (g.nvars() != h.nvars()) throw DimensionError("pairing arity mismatch");
  const Poly<S>& small = g.size() <= h.size() ? g : h;
  const Poly<S>& large = g.size() <= h.size() ? h : g;
  S acc(0);
  for (const auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it == large.terms().end()) continue;
    acc = acc + monomial_factorial<S>(m) * c * it->second;
  }
  return acc;
}

/// (D_h g)(alpha), computed as the zero-pairing of h with g translated to alpha.
template <class S>
S apply_operator_at(const Poly<S>& h, const Poly<S>& g, std::span<const S> alpha) {
  return pairing_at_zero(h, g.translate(alpha));
}

// ---- univariate interpolation ----

/// Matrix B with coeff_{v^j}(p) = sum_k B(j, k) p(nodes[k]) for every p of
/// degree < nodes.size(). Throws DomainError on repeated nodes.
template <class S>
Matrix<S> interpolation_matrix(std::span<const S> nodes);

/// The unique polynomial of degree < count through the (node, value) pairs.
template <class S>
Poly<S> interpolate_univariate(std::span<const std::pair<S, S>> values);

/// Degree-j homogeneous component computed from the dilations f(mu_l x) at
/// deg(f)+1 distinct scalars (default 0, 1, ..., deg(f)).
template <class S>
Poly<S> homogeneous_component_interp(const Poly<S>& f, unsigned j,
                                     std::optional<std::vector<S>> nodes = std::nullopt);

/// Default nodes 0, 1, ..., count-1.
template <class S>
std::vector<S> default_nodes(std::size_t count) {
  std::vector<S> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(scalar_from_int<S>(static_cast<long>(k)));
  return out;
}

template <class S>
Poly<S> interpolate_univariate(std::span<const std::pair<S, S>> values) {
  const std::size_t n = values.size();
  if (n == 0) throw DomainError("interpolation needs at least one node");
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<S> x(n), coef(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = values[k].first;
    coef[k] = values[k].second;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (x[i] == x[j]) throw DomainError("interpolation nodes must be distinct");
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k) {
      coef[k] = (coef[k] - coef[k - 1]) / (x[k] - x[k - level]);
      if (k == level) break;
    }
  std::vector<S> mono(n, S(0));  // Horner on the Newton form
  for (std::size_t k = n; k-- > 0;) {
    // mono <- mono * (v - x[k]) + coef[k]
    std::vector<S> next(n, S(0));
    for (std::size_t d = 0; d + 1 < n; ++d) {
      next[d + 1] = next[d + 1] + mono[d];
      next[d] = next[d] - mono[d] * x[k];
    }
    next[0] = next[0] + coef[k];
    mono = std::move(next);
  }
  Poly<S> p(1);
  for (std::size_t d = 0; d < n; ++d) p.add_term(Monomial{static_cast<unsigned>(d)}, mono[d]);
  return p;
}

template <class S>
Matrix<S> interpolation_matrix(std::span<const S> nodes) {
  const std::size_t n = nodes.size();
  Matrix<S> b(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::pair<S, S>> pts;
    for (std::size_t l = 0; l < n; ++l) pts.emplace_back(nodes[l], l == k ? S(1) : S(0));
    const Poly<S> lk = interpolate_univariate<S>(pts);
    for (std::size_t j = 0; j < n; ++j) b(j, k) = lk.coeff(Monomial{static_cast<unsigned>(j)});
  }
  return b;
}

template <class S>
Poly<S> homogeneous_component_interp(const Poly<S>& f, unsigned j, std::optional<std::vector<S>> nodes) {
  const unsigned deg = f.degree();
  if (j > deg) return Poly<S>(f.nvars());
  std::vector<S> mu = nodes ? *nodes : default_nodes<S>(deg + 1);
  if (mu.size() < static_cast<std::size_t>(deg) + 1)
    throw DomainError("need deg(f)+1 interpolation scalars");
  mu.resize(deg + 1);
  const Matrix<S> b = interpolation_matrix<S>(mu);
  Poly<S> r(f.nvars());
  for (std::size_t l = 0; l < mu.size(); ++l) r = r + f.dilate(mu[l]).scaled(b(j, l));
  return r;
}

}  // namespace sroabp
