#pragma once

#include <optional>
#include <vector>

#include "sroabp/poly.hpp"

namespace sroabp {

struct WaringTerm {
  ComplexF weight;
  std::vector<ComplexF> form;  // coefficients c of <c, t>
  ComplexF constant;
  unsigned power = 0;
};

/// sum_k weight_k (<form_k, t> + constant_k)^power_k.
struct WaringDecomposition {
  std::size_t nvars = 0;
  std::vector<WaringTerm> terms;
  std::size_t size() const { return terms.size(); }
};

struct FunctionalEvalPlan {
  std::vector<std::vector<ComplexF>> points;
  std::vector<ComplexF> weights;
  unsigned degree_bound = 0;
  std::size_t size() const { return points.size(); }
};

/// Rank of the span of all partial derivatives d_e f, e <= the individual
/// degree vector. Throws GuardError beyond 1e5 derivatives.
std::size_t dpd(const Poly<Rational>& f);

/// Numeric variant for complex polynomials (SVD rank at tol).
std::size_t dpd_numeric(const Poly<ComplexF>& f, double tol = kDefaultTol);

/// Rank of the order-k partial derivatives only.
std::size_t partials_rank_at_order(const Poly<Rational>& f, unsigned k);

/// ceil(dpd(f) / (deg(f) + 1)).
std::size_t catalecticant_lower_bound(const Poly<Rational>& f);

/// Roots-of-unity decomposition of t^a into prod_{i != i0} (a_i + 1) powers,
/// i0 the variable of least positive exponent. Throws DomainError for a = 0.
WaringDecomposition monomial_waring(const Monomial& a);

/// Per-monomial decompositions of h, weighted by its coefficients.
WaringDecomposition poly_waring(const Poly<ComplexF>& h);
WaringDecomposition poly_waring(const Poly<Rational>& h);

Poly<ComplexF> expand(const WaringDecomposition& dec);

/// Largest coefficient error of the expansion against h, relative to
/// max(1, largest coefficient of h).
double decomposition_error(const WaringDecomposition& dec, const Poly<ComplexF>& h);

/// Points y_q and weights l_q with sum_q l_q g(y_q) = (D_h g)(alpha) for all
/// g of degree <= d_prime. Interpolation scalars default to the (d_prime+1)-th
/// roots of unity scaled by radius. Throws DomainError when dec does not expand to h.
FunctionalEvalPlan functional_eval_plan(const Poly<ComplexF>& h, const WaringDecomposition& dec, unsigned d_prime,
                                        const std::vector<ComplexF>& alpha,
                                        std::optional<std::vector<ComplexF>> nodes = std::nullopt,
                                        double radius = 1.0);

}  // namespace sroabp
