#include "sroabp/roabp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sroabp/linalg.hpp"

namespace sroabp {

namespace {

void check_expand_guard(std::size_t n, unsigned d) {
  if (std::pow(static_cast<double>(d) + 1.0, static_cast<double>(n)) > kExpandGuard)
    throw GuardError("expansion guard exceeded: (d+1)^n > 1e6");
}

bool is_permutation_of_n(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

// Row vector of polynomials times a layer given as coefficient matrices in x_var.
std::vector<Poly<Rational>> apply_layer(const std::vector<Poly<Rational>>& v,
                                        const std::vector<Matrix<Rational>>& coeffs, std::size_t var,
                                        std::size_t nvars) {
  const std::size_t cols = coeffs.empty() ? 0 : coeffs[0].cols();
  std::vector<Poly<Rational>> next(cols, Poly<Rational>(nvars));
  for (unsigned j = 0; j < coeffs.size(); ++j) {
    const auto& m = coeffs[j];
    const Poly<Rational> xj = Poly<Rational>::monomial(Monomial::unit(nvars, var, j));
    for (std::size_t a = 0; a < m.rows(); ++a) {
      if (v[a].is_zero()) continue;
      const Poly<Rational> va = v[a] * xj;
      for (std::size_t b = 0; b < cols; ++b)
        if (!is_zero(m(a, b))) next[b] = next[b] + va.scaled(m(a, b));
    }
  }
  return next;
}

std::vector<Matrix<Rational>> layer_coefficients(const Matrix<Univariate<Rational>>& layer, unsigned d) {
  std::vector<Matrix<Rational>> out(d + 1, Matrix<Rational>(layer.rows(), layer.cols()));
  for (std::size_t a = 0; a < layer.rows(); ++a)
    for (std::size_t b = 0; b < layer.cols(); ++b)
      for (unsigned j = 0; j <= d; ++j) out[j](a, b) = layer(a, b).coeff(j);
  return out;
}

Poly<Rational> contract(const std::vector<Poly<Rational>>& v, const std::vector<Rational>& c,
                        std::size_t nvars) {
  Poly<Rational> out(nvars);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!is_zero(c[k])) out = out + v[k].scaled(c[k]);
  return out;
}

std::vector<Poly<Rational>> start_vector(const std::vector<Rational>& u, std::size_t nvars) {
  std::vector<Poly<Rational>> v;
  for (const auto& x : u) v.push_back(Poly<Rational>::constant(nvars, x));
  return v;
}

template <class S>
Poly<S> expand_diag(const DiagRoabp<S>& r) {
  r.validate();
  check_expand_guard(r.n, r.d);
  Poly<S> out(r.n);
  for (std::size_t j = 0; j < r.w(); ++j) {
    Poly<S> prod = Poly<S>::constant(r.n, r.weights[j]);
    for (std::size_t i = 0; i < r.n && !prod.is_zero(); ++i) {
      Poly<S> f(r.n);
      const auto& cs = r.rows[j][i].coeffs();
      for (unsigned k = 0; k < cs.size(); ++k) f.add_term(Monomial::unit(r.n, i, k), cs[k]);
      prod = prod * f;
    }
    out = out + prod;
  }
  return out;
}

}  // namespace

void Roabp::validate() const {
  if (!is_permutation_of_n(order, n)) throw DimensionError("ROABP order is not a permutation of n");
  if (layers.size() != n) throw DimensionError("ROABP needs one layer per variable");
  std::size_t dim = u.size();
  for (const auto& layer : layers) {
    if (layer.rows() != dim) throw DimensionError("ROABP layer dimensions are incompatible");
    for (std::size_t a = 0; a < layer.rows(); ++a)
      for (std::size_t b = 0; b < layer.cols(); ++b)
        if (layer(a, b).degree() > d) throw DimensionError("ROABP entry degree exceeds d");
    dim = layer.cols();
  }
  if (dim != c.size()) throw DimensionError("ROABP output vector length mismatch");
}

CommRoabp::CommRoabp(std::size_t n, unsigned d, std::size_t w,
                     std::vector<std::vector<Matrix<Rational>>> a, std::vector<Rational> b,
                     std::vector<Rational> c)
    : n_(n), d_(d), w_(w), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.size() != n_) throw DimensionError("commutative ROABP needs n coefficient lists");
  if (b_.size() != w_ || c_.size() != w_) throw DimensionError("boundary vector length differs from w");
  std::vector<Matrix<Rational>> all;
  for (const auto& row : a_) {
    if (row.size() != static_cast<std::size_t>(d_) + 1)
      throw DimensionError("commutative ROABP needs d+1 coefficient matrices per variable");
    for (const auto& m : row) {
      if (m.rows() != w_ || m.cols() != w_) throw DimensionError("coefficient matrix is not w x w");
      all.push_back(m);
    }
  }
  if (!check_commuting(all)) throw NonCommutingError("coefficient matrices do not commute");
}

bool check_commuting(std::span<const Matrix<Rational>> mats) {
  if (mats.empty()) return true;
  const std::size_t w = mats[0].rows();
  for (const auto& m : mats)
    if (m.rows() != w || m.cols() != w) throw DimensionError("check_commuting: shape mismatch");
  // Skip exact duplicates; they commute with each other trivially.
  std::vector<const Matrix<Rational>*> distinct;
  for (const auto& m : mats)
    if (std::none_of(distinct.begin(), distinct.end(), [&](auto* p) { return *p == m; }))
      distinct.push_back(&m);
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t j = i + 1; j < distinct.size(); ++j)
      if (!(*distinct[i] * *distinct[j] == *distinct[j] * *distinct[i])) return false;
  return true;
}

Poly<Rational> expand(const Roabp& r) {
  r.validate();
  check_expand_guard(r.n, r.d);
  auto v = start_vector(r.u, r.n);
  for (std::size_t i = 0; i < r.n; ++i) v = apply_layer(v, layer_coefficients(r.layers[i], r.d), r.order[i], r.n);
  return contract(v, r.c, r.n);
}

Poly<Rational> expand(const CommRoabp& r) {
  check_expand_guard(r.n(), r.d());
  auto v = start_vector(r.b(), r.n());
  for (std::size_t i = 0; i < r.n(); ++i) v = apply_layer(v, r.coeffs()[i], i, r.n());
  return contract(v, r.c(), r.n());
}

Poly<Rational> expand(const DiagRoabp<Rational>& r) { return expand_diag(r); }
Poly<ComplexF> expand(const DiagRoabp<ComplexF>& r) { return expand_diag(r); }

NisanProfile nisan_profile(const Poly<Rational>& f, std::span<const std::size_t> order) {
  const std::size_t n = f.nvars();
  if (!is_permutation_of_n(order, n)) throw DimensionError("nisan_profile: order is not a permutation");
  NisanProfile prof;
  prof.order.assign(order.begin(), order.end());
  for (std::size_t cut = 1; cut < n; ++cut) {
    // Rows: projections of the support onto the first `cut` order variables;
    // columns: projections onto the rest.
    std::map<Monomial, std::size_t, GradedLexLess> rows, cols;
    std::vector<std::tuple<Monomial, Monomial, Rational>> entries;
    for (const auto& [m, c] : f.terms()) {
      Monomial pre(cut), post(n - cut);
      for (std::size_t k = 0; k < n; ++k) (k < cut ? pre[k] : post[k - cut]) = m[order[k]];
      rows.try_emplace(pre, 0);
      cols.try_emplace(post, 0);
      entries.emplace_back(pre, post, c);
    }
    std::size_t idx = 0;
    for (auto& [m, i] : rows) i = idx++;
    idx = 0;
    for (auto& [m, i] : cols) i = idx++;
    Matrix<Rational> mat(rows.size(), cols.size());
    for (const auto& [pre, post, c] : entries) mat(rows.at(pre), cols.at(post)) = c;
    prof.ranks.push_back(rank_exact(mat));
  }
  for (auto r : prof.ranks) {
    prof.size += r;
    prof.width = std::max(prof.width, r);
  }
  return prof;
}

CommRoabp construct_esym_comm(std::size_t n, unsigned d) {
  if (d > n) throw DomainError("ESym construction needs d <= n");
  const std::size_t w = d + 1;
  Matrix<Rational> shift(w, w);
  for (std::size_t k = 0; k + 1 < w; ++k) shift(k, k + 1) = 1;
  std::vector<std::vector<Matrix<Rational>>> a(n, {Matrix<Rational>::identity(w), shift});
  std::vector<Rational> b(w, Rational(0)), c(w, Rational(0));
  b[0] = 1;
  c[d] = 1;
  return CommRoabp(n, 1, w, std::move(a), std::move(b), std::move(c));
}

CommRoabp construct_power_comm(std::size_t n, unsigned d) {
  const std::size_t w = d + 1;
  Matrix<Rational> a1(w, w);
  for (std::size_t k = 0; k + 1 < w; ++k) a1(k, k + 1) = static_cast<long>(d - k);
  std::vector<Matrix<Rational>> powers{Matrix<Rational>::identity(w)};
  for (unsigned j = 1; j <= d; ++j) powers.push_back(powers.back() * a1);
  for (unsigned j = 0; j <= d; ++j) powers[j] = powers[j].scaled(1 / factorial<Rational>(j));
  std::vector<std::vector<Matrix<Rational>>> a(n, powers);
  std::vector<Rational> b(w, Rational(0)), c(w, Rational(0));
  b[0] = 1;
  c[d] = 1;
  return CommRoabp(n, d, w, std::move(a), std::move(b), std::move(c));
}

DiagRoabp<Rational> construct_esym_diag(std::size_t n, unsigned d, std::optional<std::vector<Rational>> nodes) {
  if (d > n) throw DomainError("ESym construction needs d <= n");
  const std::vector<Rational> a = nodes ? *nodes : default_nodes<Rational>(n + 1);
  if (a.size() != n + 1) throw DimensionError("ESym diagonal construction needs n+1 nodes");
  const Matrix<Rational> interp = interpolation_matrix<Rational>(a);
  DiagRoabp<Rational> r;
  r.n = n;
  r.d = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    r.rows.emplace_back(n, Univariate<Rational>{Rational(1), a[j]});
    r.weights.push_back(interp(d, j));
  }
  return r;
}

DiagRoabp<Rational> construct_power_diag(std::size_t n, unsigned d, std::optional<std::vector<Rational>> nodes) {
  const std::size_t count = n * d + 1;
  const std::vector<Rational> a = nodes ? *nodes : default_nodes<Rational>(count);
  if (a.size() != count) throw DimensionError("power diagonal construction needs nd+1 nodes");
  const Matrix<Rational> interp = interpolation_matrix<Rational>(a);
  DiagRoabp<Rational> r;
  r.n = n;
  r.d = d;
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Rational> coeffs;
    Rational p = 1;
    for (unsigned l = 0; l <= d; ++l) {
      coeffs.push_back(p / factorial<Rational>(l));
      p *= a[j];
    }
    r.rows.emplace_back(n, Univariate<Rational>(std::move(coeffs)));
    r.weights.push_back(factorial<Rational>(d) * interp(d, j));
  }
  return r;
}

DiagCurveForm<Rational> to_curve_form(const DiagRoabp<Rational>& r) {
  r.validate();
  DiagCurveForm<Rational> out;
  const std::size_t w = r.w();
  out.nodes = default_nodes<Rational>(w);
  out.factors.assign(r.n, Poly<Rational>(2));
  if (w == 0) return out;
  const Matrix<Rational> interp = interpolation_matrix<Rational>(out.nodes);
  for (std::size_t i = 0; i < r.n; ++i) {
    Poly<Rational> g(2);
    for (std::size_t j = 0; j < w; ++j) {
      const Rational scale = i == 0 ? r.weights[j] : Rational(1);
      const auto& row = r.rows[j][i].coeffs();
      for (std::size_t s = 0; s < w; ++s) {
        const Rational lt = interp(s, j) * scale;
        if (is_zero(lt)) continue;
        for (unsigned k = 0; k < row.size(); ++k) g.add_term(Monomial{static_cast<unsigned>(s), k}, lt * row[k]);
      }
    }
    out.factors[i] = std::move(g);
  }
  return out;
}

Roabp to_roabp(const CommRoabp& r) {
  Roabp out;
  out.n = r.n();
  out.d = r.d();
  out.order = identity_order(r.n());
  out.u = r.b();
  out.c = r.c();
  for (std::size_t i = 0; i < r.n(); ++i) {
    Matrix<Univariate<Rational>> layer(r.w(), r.w());
    for (std::size_t a = 0; a < r.w(); ++a)
      for (std::size_t b = 0; b < r.w(); ++b) {
        std::vector<Rational> cs;
        for (unsigned j = 0; j <= r.d(); ++j) cs.push_back(r.coeff(i, j)(a, b));
        layer(a, b) = Univariate<Rational>(std::move(cs));
      }
    out.layers.push_back(std::move(layer));
  }
  return out;
}

CommRoabp to_comm(const DiagRoabp<Rational>& r) {
  r.validate();
  const std::size_t w = r.w();
  std::vector<std::vector<Matrix<Rational>>> a(r.n, std::vector<Matrix<Rational>>(r.d + 1, Matrix<Rational>(w, w)));
  for (std::size_t i = 0; i < r.n; ++i)
    for (unsigned j = 0; j <= r.d; ++j)
      for (std::size_t k = 0; k < w; ++k) a[i][j](k, k) = r.rows[k][i].coeff(j);
  return CommRoabp(r.n, r.d, w, std::move(a), r.weights, std::vector<Rational>(w, Rational(1)));
}

Roabp to_roabp(const DiagRoabp<Rational>& r) { return to_roabp(to_comm(r)); }

CommRoabp to_comm(const Roabp& r) {
  r.validate();
  const std::size_t w = r.u.size();
  std::vector<std::vector<Matrix<Rational>>> a(r.n);
  for (std::size_t i = 0; i < r.n; ++i) {
    const auto& layer = r.layers[i];
    if (layer.rows() != w || layer.cols() != w)
      throw NonCommutingError("ROABP layers are not all square of one size");
    // Layers may appear in any order; a commutative product does not care.
    a[r.order[i]] = layer_coefficients(layer, r.d);
  }
  return CommRoabp(r.n, r.d, w, std::move(a), r.u, r.c);
}

}  // namespace sroabp
