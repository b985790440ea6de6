#include "sroabp/dualspace.hpp"

#include <algorithm>
#include <cmath>

#include "sroabp/linalg.hpp"

namespace sroabp {

namespace {

std::vector<Monomial> monomials_up_to(std::size_t r, unsigned k) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= k; ++d) {
    auto part = monomials_of_degree(r, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Reduced row echelon form with columns scanned in the given order; rows are
// the input vectors. Entries below `zero` relative to the pivot are cleared.
std::vector<std::vector<ComplexF>> canonical_echelon(std::vector<std::vector<ComplexF>> rows, double zero) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows[0].size();
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t best = next;
    for (std::size_t i = next; i < rows.size(); ++i)
      if (std::abs(rows[i][c]) > std::abs(rows[best][c])) best = i;
    if (std::abs(rows[best][c]) <= zero) continue;
    std::swap(rows[best], rows[next]);
    const ComplexF inv = 1.0 / rows[next][c];
    for (auto& x : rows[next]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      const ComplexF f = rows[i][c];
      if (f == ComplexF(0.0)) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[next][j];
    }
    ++next;
  }
  rows.resize(next);
  for (auto& row : rows)
    for (auto& x : row) {
      if (std::abs(x.real()) <= zero) x.real(0.0);
      if (std::abs(x.imag()) <= zero) x.imag(0.0);
    }
  return rows;
}

}  // namespace

DualSpaceAtPoint dual_space_at(const MatrixRing& ring, const VarietyPoint& p, double tol) {
  const std::size_t r = ring.r;
  if (p.coords.size() != r) throw DimensionError("dual_space_at: point arity mismatch");
  std::vector<Poly<ComplexF>> shifted;
  std::vector<double> scale;
  for (const auto& g : ring.border) {
    shifted.push_back(to_complex(g).translate(p.coords));
    scale.push_back(max_abs_coeff(shifted.back()));
  }

  DualSpaceAtPoint result;
  result.point = p;
  std::size_t prev_dim = 0;
  std::vector<DerivOperator<ComplexF>> prev_basis;
  const unsigned cap = static_cast<unsigned>(ring.m());
  for (unsigned k = 0; k <= cap + 1; ++k) {
    const auto cols = monomials_up_to(r, k);
    std::map<Monomial, std::size_t, GradedLexLess> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], j);

    // Unknowns are y_e = e! h_e, so each constraint row holds plain
    // coefficients of a translated ideal element. Rows are scaled by the
    // whole element, not the truncated part, so rounding noise in the point
    // stays below the rank threshold.
    std::vector<std::vector<ComplexF>> rows;
    for (std::size_t gi = 0; gi < shifted.size(); ++gi) {
      if (scale[gi] == 0.0) continue;
      for (const auto& b : monomials_up_to(r, k)) {
        std::vector<ComplexF> row(cols.size(), 0.0);
        bool any = false;
        for (const auto& [e, c] : shifted[gi].terms()) {
          auto it = col_index.find(e * b);
          if (it == col_index.end()) continue;
          row[it->second] += c / scale[gi];
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    Matrix<ComplexF> sys(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) sys(i, j) = rows[i][j];
    const auto null = nullspace_numeric(sys, tol, 1.0);

    if (k > 0 && null.size() == prev_dim) {
      result.basis = std::move(prev_basis);
      return result;
    }
    if (k > cap) break;

    prev_dim = null.size();
    prev_basis.clear();
    for (const auto& row : canonical_echelon(null, 1e-10)) {
      Poly<ComplexF> h(r);
      std::size_t pivot = row.size();
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != ComplexF(0.0)) {
          if (pivot == row.size()) pivot = j;
          h.add_term(cols[j], row[j] / monomial_factorial<ComplexF>(cols[j]));
        }
      h = h.scaled(monomial_factorial<ComplexF>(cols[pivot]));
      prev_basis.push_back({std::move(h)});
    }
  }
  throw NumericError("dual_space_at: dimension did not stabilize within the order cap");
}

DualBasis build_dual_basis(const MatrixRing& ring, const std::vector<VarietyPoint>& points, double tol) {
  DualBasis db;
  db.normal_set = ring.normal_set;
  std::size_t total = 0;
  for (const auto& p : points) {
    db.spaces.push_back(dual_space_at(ring, p, tol));
    total += db.spaces.back().local_dim();
  }
  const std::size_t m = ring.m();
  if (total != m)
    throw NumericError("build_dual_basis: local dimensions sum to " + std::to_string(total) +
                       " but the normal set has " + std::to_string(m) + " elements");
  db.psi = Matrix<ComplexF>(m, m);
  std::size_t row = 0;
  for (const auto& space : db.spaces)
    for (const auto& op : space.basis) {
      for (std::size_t a = 0; a < m; ++a) {
        const Poly<ComplexF> mono = Poly<ComplexF>::monomial(ring.normal_set[a], ComplexF(1.0));
        db.psi(row, a) = pairing_at_zero(op.op, mono.translate(space.point.coords));
      }
      ++row;
    }
  db.condition = singular_values(db.psi).condition;
  if (!(db.condition <= 1.0 / tol)) throw NumericError("build_dual_basis: psi is numerically singular");
  db.gamma = inverse_numeric(db.psi);
  return db;
}

DualBasis build_dual_basis(const MatrixRing& ring, double tol, std::uint64_t seed) {
  return build_dual_basis(ring, variety(ring, tol, seed), tol);
}

std::vector<ComplexF> operator_evaluations(const DualBasis& db, const Poly<ComplexF>& g) {
  std::vector<ComplexF> out;
  for (const auto& space : db.spaces) {
    const Poly<ComplexF> shifted = g.translate(space.point.coords);
    for (const auto& op : space.basis) out.push_back(pairing_at_zero(op.op, shifted));
  }
  return out;
}

Poly<ComplexF> reduce_mod_J(const DualBasis& db, const Poly<ComplexF>& g) {
  const auto evals = operator_evaluations(db, g);
  const auto coeffs = vec_mat<ComplexF>(evals, db.gamma.transpose());
  Poly<ComplexF> out(g.nvars());
  for (std::size_t a = 0; a < db.normal_set.size(); ++a) out.add_term(db.normal_set[a], coeffs[a]);
  return out;
}

}  // namespace sroabp
