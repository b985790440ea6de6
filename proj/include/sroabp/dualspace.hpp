#pragma once

#include <vector>

#include "sroabp/matring.hpp"
#include "sroabp/poly.hpp"

namespace sroabp {

/// Local dual space at a variety point: operators D_h with D_h(g)(point) = 0
/// for every g in J. The basis is in reduced echelon form over the monomials
/// in ascending graded-lex order, each pivot coefficient equal to 1.
struct DualSpaceAtPoint {
  VarietyPoint point;
  std::vector<DerivOperator<ComplexF>> basis;
  std::size_t local_dim() const { return basis.size(); }
};

struct DualBasis {
  std::vector<DualSpaceAtPoint> spaces;
  Matrix<ComplexF> psi;    // rows (u, v), columns normal-set monomials
  Matrix<ComplexF> gamma;  // inverse of psi: rows normal-set monomials, columns (u, v)
  double condition = 0.0;
  std::vector<Monomial> normal_set;
};

/// Macaulay construction up to the first order at which the dimension
/// stabilizes. Throws NumericError when it does not stabilize by order |NS|.
DualSpaceAtPoint dual_space_at(const MatrixRing& ring, const VarietyPoint& p, double tol = kDefaultTol);

/// Throws NumericError when the local dimensions do not sum to |NS| or when
/// psi has condition number above 1/tol.
DualBasis build_dual_basis(const MatrixRing& ring, const std::vector<VarietyPoint>& points,
                           double tol = kDefaultTol);
DualBasis build_dual_basis(const MatrixRing& ring, double tol = kDefaultTol, std::uint64_t seed = 42);

/// NS-supported normal form of g modulo J through the dual basis.
Poly<ComplexF> reduce_mod_J(const DualBasis& db, const Poly<ComplexF>& g);

/// (D_h g)(alpha) for every basis operator, in (u, v) order.
std::vector<ComplexF> operator_evaluations(const DualBasis& db, const Poly<ComplexF>& g);

}  // namespace sroabp
