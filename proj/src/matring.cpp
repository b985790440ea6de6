#include "sroabp/matring.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <random>

#include "eigen_bridge.hpp"
#include "sroabp/linalg.hpp"
#include "sroabp/roabp.hpp"

namespace sroabp {

namespace {

// Dense univariate helpers, coefficients in ascending degree.
using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Dense remainder(Dense a, const Dense& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense quotient(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Dense q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  return q;
}

// p / gcd(p, p'): same roots as p, all simple.
Dense squarefree_part(const Poly<Rational>& p) {
  Dense a(p.degree() + 1);
  for (const auto& [mono, c] : p.terms()) a[mono[0]] = c;
  Dense da;
  for (std::size_t k = 1; k < a.size(); ++k) da.push_back(a[k] * static_cast<long>(k));
  trim(da);
  if (da.empty()) return a;
  Dense x = a, y = da;
  while (!y.empty()) {
    Dense rem = remainder(x, y);
    x = std::move(y);
    y = std::move(rem);
  }
  return quotient(a, x);
}

// Newton on a polynomial with simple roots. The estimate is returned
// unchanged if the iteration wanders off.
ComplexF polish_root(const std::vector<ComplexF>& q, ComplexF x0) {
  ComplexF x = x0;
  for (int it = 0; it < 8; ++it) {
    ComplexF val = 0.0, der = 0.0;
    for (std::size_t k = q.size(); k-- > 0;) {
      der = der * x + val;
      val = val * x + q[k];
    }
    if (der == ComplexF(0.0)) break;
    const ComplexF step = val / der;
    x -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
  }
  if (!(std::abs(x - x0) <= 1e-6 * (1.0 + std::abs(x0)))) return x0;
  return x;
}

std::vector<Rational> vectorize(const Matrix<Rational>& m) { return {m.data().begin(), m.data().end()}; }

// Columns are the vectorized normal-set values.
Matrix<Rational> span_matrix(const std::vector<Matrix<Rational>>& values, std::size_t w) {
  Matrix<Rational> k(w * w, values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t e = 0; e < w * w; ++e) k(e, j) = values[j].data()[e];
  return k;
}

Poly<Rational> relation(const Monomial& b, const std::vector<Monomial>& ns, const std::vector<Rational>& coeffs) {
  Poly<Rational> p = Poly<Rational>::monomial(b);
  for (std::size_t j = 0; j < ns.size(); ++j) p.add_term(ns[j], -coeffs[j]);
  return p;
}

}  // namespace

std::optional<std::size_t> MatrixRing::ns_index(const Monomial& a) const {
  auto it = ns_lookup.find(a);
  if (it == ns_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> MatrixRing::border_divisor(const Monomial& a) const {
  for (std::size_t k = 0; k < border_monomials.size(); ++k)
    if (border_monomials[k].divides(a)) return k;
  return std::nullopt;
}

MatrixRing build_ring(std::vector<Matrix<Rational>> generators) {
  if (generators.empty()) throw DimensionError("build_ring: empty generator list");
  if (!generators[0].is_square()) throw DimensionError("build_ring: generators must be square");
  if (!check_commuting(generators)) throw NonCommutingError("build_ring: generators do not commute");

  MatrixRing ring;
  ring.w = generators[0].rows();
  ring.r = generators.size();
  ring.generators = std::move(generators);
  const std::size_t w = ring.w, r = ring.r;
  const unsigned cap = static_cast<unsigned>(w * w + 1);

  for (unsigned deg = 0;; ++deg) {
    if (deg > cap) throw Error("build_ring: closure exceeded the degree cap");
    std::size_t accepted = 0;
    for (const auto& mono : monomials_of_degree(r, deg)) {
      if (std::any_of(ring.corners.begin(), ring.corners.end(), [&](const Monomial& c) { return c.divides(mono); }))
        continue;
      Matrix<Rational> value = Matrix<Rational>::identity(w);
      if (deg > 0) {
        std::size_t i = 0;
        while (mono[i] == 0) ++i;
        const Monomial parent = mono / Monomial::unit(r, i);
        value = ring.normal_values[ring.ns_lookup.at(parent)] * ring.generators[i];
      }
      const auto vec = vectorize(value);
      std::optional<std::vector<Rational>> dep;
      if (!ring.normal_values.empty()) dep = solve_exact(span_matrix(ring.normal_values, w), vec);
      if (dep) {
        ring.corners.push_back(mono);
      } else {
        ring.ns_lookup.emplace(mono, ring.normal_set.size());
        ring.normal_set.push_back(mono);
        ring.normal_values.push_back(std::move(value));
        ++accepted;
      }
    }
    if (accepted == 0) break;
  }

  // Border relations and multiplication matrices.
  const std::size_t m = ring.m();
  const Matrix<Rational> k = span_matrix(ring.normal_values, w);
  std::map<Monomial, std::vector<Rational>, GradedLexLess> border_coeffs;
  ring.mult.assign(r, Matrix<Rational>(m, m));
  for (std::size_t col = 0; col < m; ++col) {
    const Monomial& a = ring.normal_set[col];
    for (std::size_t i = 0; i < r; ++i) {
      const Monomial b = a * Monomial::unit(r, i);
      if (auto idx = ring.ns_index(b)) {
        ring.mult[i](*idx, col) = 1;
        continue;
      }
      auto it = border_coeffs.find(b);
      if (it == border_coeffs.end()) {
        auto coeffs = solve_exact(k, vectorize(ring.generators[i] * ring.normal_values[col]));
        if (!coeffs) throw Error("build_ring: border monomial outside the closure span");
        it = border_coeffs.emplace(b, std::move(*coeffs)).first;
      }
      for (std::size_t row = 0; row < m; ++row) ring.mult[i](row, col) = it->second[row];
    }
  }
  for (const auto& [b, coeffs] : border_coeffs) {
    ring.border_monomials.push_back(b);
    ring.border.push_back(relation(b, ring.normal_set, coeffs));
  }
  return ring;
}

Poly<Rational> minimal_polynomial(const Matrix<Rational>& a) {
  if (!a.is_square()) throw DimensionError("minimal_polynomial: matrix is not square");
  const std::size_t w = a.rows();
  std::vector<Matrix<Rational>> powers{Matrix<Rational>::identity(w)};
  while (true) {
    Matrix<Rational> next = powers.back() * a;
    const auto dep = solve_exact(span_matrix(powers, w), vectorize(next));
    if (dep) {
      Poly<Rational> p = Poly<Rational>::monomial(Monomial{static_cast<unsigned>(powers.size())});
      for (std::size_t j = 0; j < powers.size(); ++j) p.add_term(Monomial{static_cast<unsigned>(j)}, -(*dep)[j]);
      return p;
    }
    powers.push_back(std::move(next));
  }
}

std::optional<Poly<Rational>> try_represent(const MatrixRing& ring, const Matrix<Rational>& b) {
  if (b.rows() != ring.w || b.cols() != ring.w) throw DimensionError("represent: matrix shape mismatch");
  const auto coeffs = solve_exact(span_matrix(ring.normal_values, ring.w), vectorize(b));
  if (!coeffs) return std::nullopt;
  Poly<Rational> p(ring.r);
  for (std::size_t j = 0; j < ring.m(); ++j) p.add_term(ring.normal_set[j], (*coeffs)[j]);
  return p;
}

Poly<Rational> represent_in_quotient(const MatrixRing& ring, const Matrix<Rational>& b) {
  auto p = try_represent(ring, b);
  if (!p) throw NotInRingError("matrix is not in the algebra generated by the ring generators");
  return *p;
}

const std::vector<Matrix<Rational>>& multiplication_matrices(const MatrixRing& ring) { return ring.mult; }

Poly<Rational> reduce_exact(const MatrixRing& ring, const Poly<Rational>& g) {
  if (g.nvars() != ring.r) throw DimensionError("reduce_exact: arity mismatch");
  Poly<Rational> cur = g;
  while (true) {
    const auto& terms = cur.terms();
    auto it = std::find_if(terms.rbegin(), terms.rend(), [&](const auto& t) { return !ring.ns_index(t.first); });
    if (it == terms.rend()) return cur;
    const Monomial mono = it->first;
    const Rational c = it->second;
    const auto k = ring.border_divisor(mono);
    if (!k) throw Error("reduce_exact: no border monomial divides a non-normal monomial");
    const Poly<Rational> shift = Poly<Rational>::monomial(mono / ring.border_monomials[*k], c);
    cur = cur - shift * ring.border[*k];
  }
}

Matrix<Rational> eval_at_matrices(const Poly<Rational>& p, std::span<const Matrix<Rational>> mats) {
  if (mats.size() != p.nvars()) throw DimensionError("eval_at_matrices: arity mismatch");
  if (mats.empty()) throw DimensionError("eval_at_matrices: needs at least one matrix");
  const std::size_t w = mats[0].rows();
  Matrix<Rational> out(w, w);
  for (const auto& [a, c] : p.terms()) {
    Matrix<Rational> v = Matrix<Rational>::identity(w);
    for (std::size_t i = 0; i < a.nvars(); ++i)
      for (unsigned k = 0; k < a[i]; ++k) v = v * mats[i];
    out = out + v.scaled(c);
  }
  return out;
}

std::size_t variety_size(const MatrixRing& ring) {
  const std::size_t m = ring.m();
  std::vector<Matrix<Rational>> mono(m);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix<Rational> v = Matrix<Rational>::identity(m);
    for (std::size_t i = 0; i < ring.r; ++i)
      for (unsigned k = 0; k < ring.normal_set[a][i]; ++k) v = v * ring.mult[i];
    mono[a] = std::move(v);
  }
  Matrix<Rational> h(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      const Matrix<Rational> p = mono[a] * mono[b];
      Rational tr = 0;
      for (std::size_t k = 0; k < m; ++k) tr += p(k, k);
      h(a, b) = tr;
      h(b, a) = tr;
    }
  return rank_exact(h);
}

std::vector<VarietyPoint> variety(const MatrixRing& ring, double tol, std::uint64_t seed) {
  const std::size_t m = ring.m(), r = ring.r;
  const std::size_t z = variety_size(ring);
  std::vector<Matrix<ComplexF>> mult;
  for (const auto& mi : ring.mult) mult.push_back(to_complex(mi));

  std::vector<std::vector<ComplexF>> simple;
  for (const auto& mi : ring.mult) {
    simple.emplace_back();
    for (const auto& c : squarefree_part(minimal_polynomial(mi))) simple.back().push_back(to_complex(c));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-1000000, 1000000);
  constexpr int kAttempts = 6;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Matrix<ComplexF> l(m, m);
    for (std::size_t i = 0; i < r; ++i) l = l + mult[i].scaled(ComplexF(static_cast<double>(coeff(rng)), 0.0));

    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(detail::to_eigen(l));
    if (schur.info() != Eigen::Success) continue;
    const Eigen::MatrixXcd& t = schur.matrixT();

    // Single-linkage clustering of the diagonal into exactly z groups.
    struct Edge {
      double dist;
      std::size_t a, b;
    };
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) edges.push_back({std::abs(t(a, a) - t(b, b)), a, b});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.dist < y.dist; });
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = m;
    double intra = 0.0, inter = std::numeric_limits<double>::infinity();
    for (const auto& e : edges) {
      const std::size_t ra = find(e.a), rb = find(e.b);
      if (ra == rb) continue;
      if (components > z) {
        parent[ra] = rb;
        --components;
        intra = e.dist;
      } else {
        inter = std::min(inter, e.dist);
      }
    }
    if (z > 1 && !(intra * 4.0 < inter)) continue;

    std::vector<std::size_t> group(m), root_id;
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t root = find(k);
      auto it = std::find(root_id.begin(), root_id.end(), root);
      group[k] = static_cast<std::size_t>(it - root_id.begin());
      if (it == root_id.end()) root_id.push_back(root);
    }
    const detail::OrderedSchur ordered = detail::order_schur(t, schur.matrixU(), group);

    std::vector<VarietyPoint> points;
    std::size_t start = 0;
    while (start < m) {
      std::size_t end = start;
      while (end < m && ordered.group[end] == ordered.group[start]) ++end;
      VarietyPoint p;
      p.multiplicity = end - start;
      for (std::size_t i = 0; i < r; ++i) {
        const Eigen::MatrixXcd cols = detail::to_eigen(mult[i]) * ordered.u.middleCols(start, end - start);
        const Eigen::MatrixXcd block = ordered.u.middleCols(start, end - start).adjoint() * cols;
        p.coords.push_back(polish_root(simple[i], block.trace() / static_cast<double>(end - start)));
      }
      points.push_back(std::move(p));
      start = end;
    }

    bool ok = true;
    for (const auto& p : points) {
      for (const auto& g : ring.border) {
        const ComplexF val = g.eval(std::span<const ComplexF>(p.coords));
        double scale = 0.0;
        for (const auto& [a, c] : g.terms()) {
          double mag = magnitude(c);
          for (std::size_t i = 0; i < r; ++i) mag *= std::pow(std::abs(p.coords[i]), a[i]);
          scale += mag;
        }
        if (std::abs(val) > tol * std::max(1.0, scale)) ok = false;
      }
    }
    if (!ok) continue;
    std::sort(points.begin(), points.end(), [](const VarietyPoint& x, const VarietyPoint& y) {
      for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i].real() != y.coords[i].real()) return x.coords[i].real() < y.coords[i].real();
        if (x.coords[i].imag() != y.coords[i].imag()) return x.coords[i].imag() < y.coords[i].imag();
      }
      return false;
    });
    return points;
  }
  throw NumericError("variety: could not separate or verify the common zeros");
}

}  // namespace sroabp
