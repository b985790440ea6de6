#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sroabp/dualspace.hpp"
#include "sroabp/matring.hpp"
#include "sroabp/roabp.hpp"

namespace sroabp {

/// F(x) = prod_i G_i(A, x_i) with G_i = sum_j coeffs[i][j](t) x_i^j, every
/// coefficient supported on the normal set; f = sum_a beta_a coeff_a(G mod J).
struct CurveForm {
  std::size_t r = 0;
  std::vector<std::vector<Poly<Rational>>> coeffs;  // [i][j], r variables
  std::vector<Rational> beta;                       // parallel to the ring's normal set

  /// G_i as a polynomial in (t_1, ..., t_r, x).
  Poly<Rational> factor(std::size_t i) const;
  /// Sum over i of the largest t-degree among the coefficients of G_i.
  unsigned t_degree() const;
};

struct OperatorReport {
  std::size_t point = 0;
  Poly<ComplexF> op;
  ComplexF weight;  // beta'_{u,v}
  std::size_t decomposition_size = 0;
  std::size_t plan_size = 0;
  std::size_t dpd = 0;
};

struct ConversionReport {
  std::size_t input_width = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  std::size_t variety_size = 0;
  std::vector<std::size_t> local_dims;
  std::vector<std::size_t> plan_sizes;
  std::size_t output_width = 0;
  std::size_t theorem_bound = 0;  // m * max plan size
  std::size_t plan_total = 0;     // sum of plan sizes
  unsigned d_prime = 0;
  double psi_condition = 0.0;
  std::vector<std::vector<ComplexF>> variety;
  std::vector<OperatorReport> operators;
  std::optional<double> max_residual;
  std::optional<bool> verified;
};

struct ConvertOptions {
  double numeric_tol = kDefaultTol;  // rank and dual-space decisions
  double verify_tol = 1e-6;
  double node_radius = 0.03;  // interpolation circle around each variety point; sized for inputs up to ~100
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  bool verify = true;
};

/// Picks ring generators among the coefficient matrices (dropping scalar
/// matrices, duplicates and members of the algebra already generated).
std::vector<Matrix<Rational>> select_generators(const CommRoabp& cr);

struct CurveResult {
  MatrixRing ring;
  CurveForm curve;
};

CurveResult comm_to_curve(const CommRoabp& cr);

struct DiagResult {
  DiagRoabp<ComplexF> diag;
  ConversionReport report;
};

DiagResult curve_to_diag(const MatrixRing& ring, const CurveForm& cf, std::size_t n, unsigned d,
                         const ConvertOptions& opts = {});

/// Full pipeline with verification against the input (when opts.verify).
DiagResult convert(const CommRoabp& cr, const ConvertOptions& opts = {});

/// Black-box polynomial for randomized comparison.
struct Evaluable {
  std::size_t n = 0;
  std::function<ComplexF(const std::vector<ComplexF>&)> eval;
  std::function<Rational(const std::vector<Rational>&)> exact;  // empty when unavailable
};

Evaluable evaluable(const Poly<Rational>& p);
Evaluable evaluable(const Poly<ComplexF>& p);
Evaluable evaluable(const Roabp& r);
Evaluable evaluable(const CommRoabp& r);
Evaluable evaluable(const DiagRoabp<Rational>& r);
Evaluable evaluable(const DiagRoabp<ComplexF>& r);

struct VerifyReport {
  std::size_t trials = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool passed = false;
};

/// Residual per trial is |p - q| / max(1, |p|, |q|) at random rational points
/// with coordinates in [-100, 100]; exact when both sides are exact. Throws
/// DimensionError when the variable counts differ.
VerifyReport verify_equal(const Evaluable& p, const Evaluable& q, std::size_t trials, std::uint64_t seed, double tol);

}  // namespace sroabp
