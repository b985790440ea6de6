#include "sroabp/poly.hpp"

#include <cmath>

namespace sroabp {

Poly<Rational> rationalize(const Poly<ComplexF>& p, long max_den, double imag_tol) {
  Poly<Rational> out(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (std::abs(c.imag()) > imag_tol) throw DomainError("rationalize: coefficient is not real");
    out.add_term(m, rationalize(c.real(), max_den));
  }
  return out;
}

}  // namespace sroabp
