#pragma once

#include <random>
#include <vector>

#include "sroabp/matrix.hpp"
#include "sroabp/poly.hpp"
#include "sroabp/roabp.hpp"

namespace sroabp::corpus {

using Rng = std::mt19937_64;

long uniform_int(Rng& rng, long lo, long hi);

Matrix<Rational> random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi);

/// Integer matrix with determinant 1 (product of unit lower and upper
/// triangular factors), so its inverse is integral too.
Matrix<Rational> random_unimodular(Rng& rng, std::size_t w);

/// A commuting pair (X, Y), block diagonal up to a unimodular conjugation.
/// Blocks carry small integer eigenvalues (possibly repeated across blocks)
/// and local nilpotent parts that are either curvilinear (a shift and its
/// square) or not (E12, E13).
std::pair<Matrix<Rational>, Matrix<Rational>> random_commuting_pair(Rng& rng, std::size_t w);

/// `count` matrices q_k(X, Y) for random bivariate q_k of degree <= max_deg.
std::vector<Matrix<Rational>> random_commuting_family(Rng& rng, std::size_t w, std::size_t count, unsigned max_deg = 2);

/// Coefficient matrices q_{i,j}(X, Y) with random integer boundary vectors.
CommRoabp random_comm_roabp(Rng& rng, std::size_t w, std::size_t n, unsigned d);

/// Random polynomial with `terms` monomials of total degree <= max_deg and
/// coefficients p/q, |p| <= 9, 1 <= q <= 4.
Poly<Rational> random_poly(Rng& rng, std::size_t nvars, unsigned max_deg, std::size_t terms);

/// The 3x3 family {E12, E13}: a single point of multiplicity 3 whose local
/// ring is not curvilinear.
std::vector<Matrix<Rational>> non_curvilinear_family();

}  // namespace sroabp::corpus
