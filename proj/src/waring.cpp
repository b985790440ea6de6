#include "sroabp/waring.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "sroabp/linalg.hpp"

namespace sroabp {

namespace {

constexpr double kDerivativeGuard = 1e5;

// omega_n^k with exact values at multiples of a quarter turn.
ComplexF root_of_unity(unsigned n, unsigned k) {
  k %= n;
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * k / n);
}

template <class S>
Matrix<S> derivative_matrix(const Poly<S>& f, const std::vector<Monomial>& ops) {
  std::vector<Poly<S>> rows;
  std::map<Monomial, std::size_t, GradedLexLess> cols;
  for (const auto& e : ops) {
    rows.push_back(f.derivative(e));
    for (const auto& [m, c] : rows.back().terms()) cols.try_emplace(m, 0);
  }
  std::size_t idx = 0;
  for (auto& [m, i] : cols) i = idx++;
  Matrix<S> mat(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [m, c] : rows[r].terms()) mat(r, cols.at(m)) = c;
  return mat;
}

template <class S>
std::vector<Monomial> all_derivatives(const Poly<S>& f) {
  const auto deg = f.individual_degrees();
  double count = 1.0;
  for (auto x : deg) count *= x + 1.0;
  if (count > kDerivativeGuard) throw GuardError("dpd: more than 1e5 partial derivatives");
  return monomials_in_box(deg);
}

ComplexF power(ComplexF x, unsigned k) {
  ComplexF r(1.0);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

std::size_t dpd(const Poly<Rational>& f) {
  if (f.is_zero()) return 0;
  return rank_exact(derivative_matrix(f, all_derivatives(f)));
}

std::size_t dpd_numeric(const Poly<ComplexF>& f, double tol) {
  if (f.is_zero()) return 0;
  return rank_numeric(derivative_matrix(f, all_derivatives(f)), tol);
}

std::size_t partials_rank_at_order(const Poly<Rational>& f, unsigned k) {
  if (f.is_zero()) return 0;
  return rank_exact(derivative_matrix(f, monomials_of_degree(f.nvars(), k)));
}

std::size_t catalecticant_lower_bound(const Poly<Rational>& f) {
  const std::size_t p = dpd(f);
  const std::size_t den = f.degree() + 1;
  return (p + den - 1) / den;
}

WaringDecomposition monomial_waring(const Monomial& a) {
  const unsigned d = a.degree();
  if (d == 0) throw DomainError("monomial_waring: the unit monomial has no homogeneous decomposition");
  const std::size_t n = a.nvars();
  std::size_t i0 = n;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > 0 && (i0 == n || a[i] < a[i0])) i0 = i;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > 0 && i != i0) others.push_back(i);

  WaringDecomposition dec;
  dec.nvars = n;
  // 1 / (multinomial(d; a) * prod_{i != i0} (a_i + 1)).
  double scale = 1.0 / factorial<double>(d);
  for (std::size_t i = 0; i < n; ++i) scale *= factorial<double>(a[i]);
  for (auto i : others) scale /= a[i] + 1.0;

  std::vector<unsigned> k(others.size(), 0);
  while (true) {
    WaringTerm term;
    term.form.assign(n, 0.0);
    term.form[i0] = 1.0;
    term.constant = 0.0;
    term.power = d;
    ComplexF w(scale);
    for (std::size_t s = 0; s < others.size(); ++s) {
      const unsigned order = a[others[s]] + 1;
      term.form[others[s]] = root_of_unity(order, k[s]);
      // eps^{-a_i} = eps since -a_i = 1 mod (a_i + 1).
      w *= root_of_unity(order, k[s]);
    }
    term.weight = w;
    dec.terms.push_back(std::move(term));
    std::size_t s = 0;
    while (s < others.size() && k[s] == a[others[s]]) k[s++] = 0;
    if (s == others.size()) break;
    ++k[s];
  }
  return dec;
}

WaringDecomposition poly_waring(const Poly<ComplexF>& h) {
  WaringDecomposition dec;
  dec.nvars = h.nvars();
  for (const auto& [m, c] : h.terms()) {
    if (m.is_one()) {
      dec.terms.push_back({c, std::vector<ComplexF>(h.nvars(), 0.0), ComplexF(1.0), 0});
      continue;
    }
    for (auto t : monomial_waring(m).terms) {
      t.weight *= c;
      dec.terms.push_back(std::move(t));
    }
  }
  return dec;
}

WaringDecomposition poly_waring(const Poly<Rational>& h) { return poly_waring(to_complex(h)); }

Poly<ComplexF> expand(const WaringDecomposition& dec) {
  Poly<ComplexF> out(dec.nvars);
  for (const auto& t : dec.terms) {
    Poly<ComplexF> lin = Poly<ComplexF>::constant(dec.nvars, t.constant);
    for (std::size_t i = 0; i < dec.nvars; ++i) lin.add_term(Monomial::unit(dec.nvars, i), t.form[i]);
    out = out + lin.pow(t.power).scaled(t.weight);
  }
  return out;
}

double decomposition_error(const WaringDecomposition& dec, const Poly<ComplexF>& h) {
  if (dec.nvars != h.nvars()) throw DimensionError("decomposition arity mismatch");
  return max_abs_coeff(expand(dec) - h) / std::max(1.0, max_abs_coeff(h));
}

FunctionalEvalPlan functional_eval_plan(const Poly<ComplexF>& h, const WaringDecomposition& dec, unsigned d_prime,
                                        const std::vector<ComplexF>& alpha,
                                        std::optional<std::vector<ComplexF>> nodes, double radius) {
  const std::size_t r = h.nvars();
  if (alpha.size() != r) throw DimensionError("functional_eval_plan: alpha arity mismatch");
  if (h.degree() > d_prime) throw DomainError("functional_eval_plan: degree bound below deg(h)");
  if (decomposition_error(dec, h) > 1e-10) throw DomainError("functional_eval_plan: decomposition does not expand to h");
  if (!(radius > 0.0)) throw DomainError("functional_eval_plan: radius must be positive");

  const std::size_t count = static_cast<std::size_t>(d_prime) + 1;
  std::vector<ComplexF> mu;
  Matrix<ComplexF> interp(count, count);
  if (nodes) {
    mu = *nodes;
    if (mu.size() != count) throw DimensionError("functional_eval_plan: need d'+1 interpolation scalars");
    interp = interpolation_matrix<ComplexF>(mu);
  } else {
    for (std::size_t l = 0; l < count; ++l) mu.push_back(radius * root_of_unity(count, l));
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t l = 0; l < count; ++l)
        interp(j, l) = root_of_unity(count, static_cast<unsigned>(count - (j * l) % count)) /
                       (static_cast<double>(count) * std::pow(radius, static_cast<double>(j)));
  }

  FunctionalEvalPlan plan;
  plan.degree_bound = d_prime;
  auto add_point = [&](std::vector<ComplexF> y, ComplexF weight) {
    double scale = 1.0;
    for (const auto& v : y) scale = std::max(scale, std::abs(v));
    for (std::size_t q = 0; q < plan.points.size(); ++q) {
      double diff = 0.0;
      for (std::size_t i = 0; i < r; ++i) diff = std::max(diff, std::abs(plan.points[q][i] - y[i]));
      if (diff <= 1e-12 * scale) {
        plan.weights[q] += weight;
        return;
      }
    }
    plan.points.push_back(std::move(y));
    plan.weights.push_back(weight);
  };

  for (const auto& term : dec.terms) {
    const bool zero_form = std::all_of(term.form.begin(), term.form.end(), [](ComplexF c) { return c == ComplexF(0.0); });
    if (zero_form) {
      add_point(alpha, term.weight * power(term.constant, term.power));
      continue;
    }
    const unsigned top = std::min(term.power, d_prime);
    std::vector<ComplexF> gamma(top + 1);
    for (unsigned j = 0; j <= top; ++j)
      gamma[j] = term.weight * binomial<double>(term.power, j) * power(term.constant, term.power - j) *
                 factorial<double>(j);
    for (std::size_t l = 0; l < count; ++l) {
      ComplexF delta(0.0);
      for (unsigned j = 0; j <= top; ++j) delta += gamma[j] * interp(j, l);
      if (delta == ComplexF(0.0)) continue;
      std::vector<ComplexF> y(r);
      for (std::size_t i = 0; i < r; ++i) y[i] = mu[l] * term.form[i] + alpha[i];
      add_point(std::move(y), delta);
    }
  }
  return plan;
}

}  // namespace sroabp
