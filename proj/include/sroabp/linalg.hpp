#pragma once

#include <optional>
#include <vector>

#include "sroabp/matrix.hpp"

namespace sroabp {

// ---- exact layer over Q ----

struct RowEchelon {
  Matrix<Rational> reduced;          // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(Matrix<Rational> m);

std::size_t rank_exact(const Matrix<Rational>& m);

/// Basis of the right kernel, one vector per free column of the RREF.
std::vector<std::vector<Rational>> nullspace_exact(const Matrix<Rational>& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(const Matrix<Rational>& m,
                                                 std::span<const Rational> b);

/// Throws DomainError when m is singular or not square.
Matrix<Rational> inverse_exact(const Matrix<Rational>& m);

// ---- numeric layer over C ----

struct EigenPair {
  ComplexF value;
  std::vector<ComplexF> vector;  // unit 2-norm
  std::size_t multiplicity = 1;  // algebraic count of merged eigenvalues
  double residual = 0.0;         // ||M v - value v||
};

/// Eigenpairs of a square complex matrix. Eigenvalues closer than
/// tol * max(1, ||M||_F) are merged into one pair whose multiplicity counts
/// them; multiplicities sum to the dimension. Throws NumericError if the
/// solver fails or a residual exceeds tol * max(1, ||M||_F).
std::vector<EigenPair> eigen(const Matrix<ComplexF>& m, double tol = kDefaultTol);

double frobenius_norm(const Matrix<ComplexF>& m);

struct SvdSummary {
  std::vector<double> singular_values;  // descending
  double condition = 0.0;               // sigma_max / sigma_min (inf if singular)
};

SvdSummary singular_values(const Matrix<ComplexF>& m);

/// Orthonormal basis of the numerical right kernel: singular vectors whose
/// singular value is <= tol * max(sigma_max, floor). With floor 0 the zero
/// matrix has a full kernel.
std::vector<std::vector<ComplexF>> nullspace_numeric(const Matrix<ComplexF>& m, double tol, double floor = 0.0);

std::size_t rank_numeric(const Matrix<ComplexF>& m, double tol);

/// Inverse via full-pivot LU; throws NumericError when singular.
Matrix<ComplexF> inverse_numeric(const Matrix<ComplexF>& m);

}  // namespace sroabp
