#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sroabp/matrix.hpp"
#include "sroabp/monomial.hpp"
#include "sroabp/poly.hpp"

namespace sroabp {

/// The commutative algebra Q[A_1, ..., A_r] of a commuting matrix family,
/// presented as Q[t_1, ..., t_r] / J with J the ideal of dependencies.
struct MatrixRing {
  std::size_t w = 0;
  std::size_t r = 0;
  std::vector<Matrix<Rational>> generators;
  std::vector<Monomial> normal_set;             // ascending graded-lex; starts with 1
  std::vector<Matrix<Rational>> normal_values;  // A^a for each normal-set monomial
  std::vector<Monomial> border_monomials;       // t_i * NS \ NS, ascending
  std::vector<Poly<Rational>> border;           // t^b - sum_a c_a t^a, parallel to border_monomials
  std::vector<Monomial> corners;                // minimal monomials outside NS
  std::vector<Matrix<Rational>> mult;           // multiplication by t_i on the NS basis

  std::size_t m() const { return normal_set.size(); }
  std::optional<std::size_t> ns_index(const Monomial& a) const;
  /// Index into `border` of a border monomial dividing `a`, if any.
  std::optional<std::size_t> border_divisor(const Monomial& a) const;

  std::map<Monomial, std::size_t, GradedLexLess> ns_lookup;
};

struct VarietyPoint {
  std::vector<ComplexF> coords;
  std::size_t multiplicity = 1;  // dimension of the local quotient
};

/// Throws NonCommutingError on non-commuting input and DimensionError on
/// mixed shapes or an empty family.
MatrixRing build_ring(std::vector<Matrix<Rational>> generators);

/// Monic least-degree univariate p with p(A) = 0.
Poly<Rational> minimal_polynomial(const Matrix<Rational>& a);

/// The NS-supported polynomial whose value at the generators is B; throws
/// NotInRingError when B is outside the algebra.
Poly<Rational> represent_in_quotient(const MatrixRing& ring, const Matrix<Rational>& b);

/// Same, returning nullopt instead of throwing.
std::optional<Poly<Rational>> try_represent(const MatrixRing& ring, const Matrix<Rational>& b);

const std::vector<Matrix<Rational>>& multiplication_matrices(const MatrixRing& ring);

/// Exact normal form modulo J by border-basis rewriting.
Poly<Rational> reduce_exact(const MatrixRing& ring, const Poly<Rational>& g);

/// sum_a c_a A^a for a polynomial in the ring variables.
Matrix<Rational> eval_at_matrices(const Poly<Rational>& p, std::span<const Matrix<Rational>> mats);

/// Number of distinct complex common zeros of J, exactly (rank of the trace form).
std::size_t variety_size(const MatrixRing& ring);

/// Distinct common zeros of J with multiplicities, sorted lexicographically by
/// (re, im) per coordinate. Throws NumericError if the points cannot be
/// separated or fail verification after the retries.
std::vector<VarietyPoint> variety(const MatrixRing& ring, double tol = kDefaultTol, std::uint64_t seed = 42);

}  // namespace sroabp
