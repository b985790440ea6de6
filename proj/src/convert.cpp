#include "sroabp/convert.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sroabp/waring.hpp"

namespace sroabp {

namespace {

bool is_scalar_matrix(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j && m(i, j) != m(0, 0)) return false;
      if (i != j && !is_zero(m(i, j))) return false;
    }
  return true;
}

struct PointAccumulator {
  std::vector<std::vector<ComplexF>> points;
  std::vector<ComplexF> weights;

  void add(const std::vector<ComplexF>& y, ComplexF w) {
    double scale = 1.0;
    for (const auto& v : y) scale = std::max(scale, std::abs(v));
    for (std::size_t q = 0; q < points.size(); ++q) {
      double diff = 0.0;
      for (std::size_t i = 0; i < y.size(); ++i) diff = std::max(diff, std::abs(points[q][i] - y[i]));
      if (diff <= 1e-12 * scale) {
        weights[q] += w;
        return;
      }
    }
    points.push_back(y);
    weights.push_back(w);
  }
};

}  // namespace

Poly<Rational> CurveForm::factor(std::size_t i) const {
  Poly<Rational> g(r + 1);
  for (unsigned j = 0; j < coeffs[i].size(); ++j)
    for (const auto& [a, c] : coeffs[i][j].terms()) {
      std::vector<unsigned> e = a.exponents();
      e.push_back(j);
      g.add_term(Monomial(std::move(e)), c);
    }
  return g;
}

unsigned CurveForm::t_degree() const {
  unsigned total = 0;
  for (const auto& row : coeffs) {
    unsigned best = 0;
    for (const auto& p : row) best = std::max(best, p.degree());
    total += best;
  }
  return total;
}

std::vector<Matrix<Rational>> select_generators(const CommRoabp& cr) {
  std::vector<Matrix<Rational>> kept;
  std::optional<MatrixRing> ring;
  for (const auto& row : cr.coeffs())
    for (const auto& m : row) {
      if (is_scalar_matrix(m)) continue;
      if (std::find(kept.begin(), kept.end(), m) != kept.end()) continue;
      if (ring && try_represent(*ring, m)) continue;
      kept.push_back(m);
      ring = build_ring(kept);
    }
  if (kept.empty()) kept.push_back(cr.n() > 0 ? cr.coeff(0, 0) : Matrix<Rational>::identity(cr.w()));
  return kept;
}

CurveResult comm_to_curve(const CommRoabp& cr) {
  CurveResult out{build_ring(select_generators(cr)), {}};
  const MatrixRing& ring = out.ring;
  CurveForm& cf = out.curve;
  cf.r = ring.r;
  cf.coeffs.resize(cr.n());
  for (std::size_t i = 0; i < cr.n(); ++i)
    for (unsigned j = 0; j <= cr.d(); ++j) cf.coeffs[i].push_back(represent_in_quotient(ring, cr.coeff(i, j)));
  for (const auto& value : ring.normal_values) {
    const auto bv = vec_mat<Rational>(cr.b(), value);
    cf.beta.push_back(dot<Rational>(bv, cr.c()));
  }
  return out;
}

DiagResult curve_to_diag(const MatrixRing& ring, const CurveForm& cf, std::size_t n, unsigned d,
                         const ConvertOptions& opts) {
  if (cf.coeffs.size() != n) throw DimensionError("curve_to_diag: factor count differs from n");
  const auto points = variety(ring, opts.numeric_tol, opts.seed);
  const DualBasis db = build_dual_basis(ring, points, opts.numeric_tol);
  const std::size_t m = ring.m();

  DiagResult out;
  ConversionReport& rep = out.report;
  rep.input_width = ring.w;
  rep.r = ring.r;
  rep.m = m;
  rep.variety_size = points.size();
  rep.psi_condition = db.condition;
  for (const auto& p : points) rep.variety.push_back(p.coords);

  // beta'_{u,v} = sum_a beta_a Gamma[a, (u,v)].
  std::vector<ComplexF> beta_prime(m, 0.0);
  for (std::size_t col = 0; col < m; ++col)
    for (std::size_t a = 0; a < m; ++a) beta_prime[col] += to_complex(cf.beta[a]) * db.gamma(a, col);
  double beta_max = 0.0;
  for (const auto& b : beta_prime) beta_max = std::max(beta_max, std::abs(b));

  unsigned op_degree = 0;
  for (const auto& space : db.spaces) {
    rep.local_dims.push_back(space.local_dim());
    for (const auto& op : space.basis) op_degree = std::max(op_degree, op.op.degree());
  }
  rep.d_prime = std::max(cf.t_degree(), op_degree);

  PointAccumulator acc;
  std::size_t col = 0;
  for (std::size_t u = 0; u < db.spaces.size(); ++u)
    for (const auto& op : db.spaces[u].basis) {
      const ComplexF bp = beta_prime[col++];
      const WaringDecomposition dec = poly_waring(op.op);
      const FunctionalEvalPlan plan = functional_eval_plan(op.op, dec, rep.d_prime, points[u].coords, std::nullopt, opts.node_radius);
      rep.operators.push_back({u, op.op, bp, dec.size(), plan.size(), dpd_numeric(op.op, opts.numeric_tol)});
      rep.plan_sizes.push_back(plan.size());
      rep.plan_total += plan.size();
      if (std::abs(bp) <= 1e-14 * beta_max) continue;
      for (std::size_t q = 0; q < plan.size(); ++q) acc.add(plan.points[q], bp * plan.weights[q]);
    }
  std::size_t max_plan = 0;
  for (auto s : rep.plan_sizes) max_plan = std::max(max_plan, s);
  rep.theorem_bound = m * max_plan;

  DiagRoabp<ComplexF>& dr = out.diag;
  dr.n = n;
  dr.d = d;
  for (std::size_t q = 0; q < acc.points.size(); ++q) {
    const std::span<const ComplexF> y(acc.points[q]);
    std::vector<Univariate<ComplexF>> row;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<ComplexF> cs;
      for (const auto& g : cf.coeffs[i]) cs.push_back(to_complex(g).eval(y));
      row.emplace_back(std::move(cs));
    }
    dr.rows.push_back(std::move(row));
    dr.weights.push_back(acc.weights[q]);
  }
  rep.output_width = dr.w();
  return out;
}

DiagResult convert(const CommRoabp& cr, const ConvertOptions& opts) {
  const CurveResult curve = comm_to_curve(cr);
  DiagResult out = curve_to_diag(curve.ring, curve.curve, cr.n(), cr.d(), opts);
  out.report.input_width = cr.w();
  if (opts.verify) {
    const VerifyReport vr = verify_equal(evaluable(cr), evaluable(out.diag), opts.trials, opts.seed, opts.verify_tol);
    out.report.max_residual = vr.max_residual;
    out.report.verified = vr.passed;
  }
  return out;
}

Evaluable evaluable(const Poly<Rational>& p) {
  return {p.nvars(), [p](const std::vector<ComplexF>& x) { return p.eval(x); },
          [p](const std::vector<Rational>& x) { return p.eval(x); }};
}

Evaluable evaluable(const Poly<ComplexF>& p) {
  return {p.nvars(), [p](const std::vector<ComplexF>& x) { return p.eval(x); }, {}};
}

Evaluable evaluable(const Roabp& r) {
  return {r.n, [r](const std::vector<ComplexF>& x) { return r.eval(std::span<const ComplexF>(x)); },
          [r](const std::vector<Rational>& x) { return r.eval(std::span<const Rational>(x)); }};
}

Evaluable evaluable(const CommRoabp& r) {
  return {r.n(), [r](const std::vector<ComplexF>& x) { return r.eval(std::span<const ComplexF>(x)); },
          [r](const std::vector<Rational>& x) { return r.eval(std::span<const Rational>(x)); }};
}

Evaluable evaluable(const DiagRoabp<Rational>& r) {
  return {r.n, [r](const std::vector<ComplexF>& x) { return r.eval(std::span<const ComplexF>(x)); },
          [r](const std::vector<Rational>& x) { return r.eval(std::span<const Rational>(x)); }};
}

Evaluable evaluable(const DiagRoabp<ComplexF>& r) {
  return {r.n, [r](const std::vector<ComplexF>& x) { return r.eval(std::span<const ComplexF>(x)); }, {}};
}

VerifyReport verify_equal(const Evaluable& p, const Evaluable& q, std::size_t trials, std::uint64_t seed, double tol) {
  if (p.n != q.n) throw DimensionError("verify_equal: variable counts differ");
  VerifyReport rep;
  rep.trials = trials;
  rep.tol = tol;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-10000, 10000);
  const bool exact = p.exact && q.exact;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> x;
    for (std::size_t i = 0; i < p.n; ++i) {
      Rational v(num(rng), 100);
      v.canonicalize();
      x.push_back(v);
    }
    double residual;
    if (exact) {
      const Rational a = p.exact(x), b = q.exact(x);
      Rational den = 1;
      if (abs(a) > den) den = abs(a);
      if (abs(b) > den) den = abs(b);
      const Rational diff = abs(a - b) / den;
      residual = diff.get_d();
    } else {
      std::vector<ComplexF> xc;
      for (const auto& v : x) xc.push_back(to_complex(v));
      const ComplexF a = p.eval(xc), b = q.eval(xc);
      residual = std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    }
    rep.max_residual = std::max(rep.max_residual, residual);
  }
  rep.passed = rep.max_residual <= tol;
  return rep;
}

}  // namespace sroabp
