#include <doctest.h>

#include "oracles.hpp"
#include "sroabp/corpus.hpp"
#include "sroabp/waring.hpp"

using namespace sroabp;

namespace {

using P = Poly<Rational>;
using PC = Poly<ComplexF>;

P x(std::size_t n, std::size_t i) { return P::variable(n, i); }

std::vector<ComplexF> random_alpha(corpus::Rng& rng, std::size_t r) {
  std::vector<ComplexF> a;
  for (std::size_t i = 0; i < r; ++i)
    a.emplace_back(corpus::uniform_int(rng, -30, 30) / 10.0, corpus::uniform_int(rng, -10, 10) / 10.0);
  return a;
}

ComplexF plan_value(const FunctionalEvalPlan& plan, const PC& g) {
  ComplexF acc = 0.0;
  for (std::size_t q = 0; q < plan.size(); ++q) acc += plan.weights[q] * g.eval(plan.points[q]);
  return acc;
}

// Worst relative error of the plan over every monomial of degree <= d'.
double plan_error(const FunctionalEvalPlan& plan, const PC& h, const std::vector<ComplexF>& alpha, unsigned d_prime) {
  double worst = 0.0;
  for (unsigned k = 0; k <= d_prime; ++k)
    for (const auto& e : monomials_of_degree(alpha.size(), k)) {
      const ComplexF want = oracle::derivative_at(h, e, alpha);
      const ComplexF got = plan_value(plan, PC::monomial(e, ComplexF(1.0)));
      worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
    }
  return worst;
}

}  // namespace

TEST_CASE("dpd examples") {
  CHECK(dpd(x(2, 0) * x(2, 1)) == 4);
  CHECK(dpd((x(2, 0) + x(2, 1)).pow(2)) == 3);
  CHECK(dpd(x(4, 0) * x(4, 1) * x(4, 2) * x(4, 3)) == 16);
  CHECK(dpd(P(3)) == 0);
  CHECK(dpd_numeric(to_complex((x(2, 0) + x(2, 1)).pow(2))) == 3);
}

TEST_CASE("dpd of the full product is 2^n") {
  for (std::size_t n = 1; n <= 5; ++n) {
    P f = P::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) f = f * x(n, i);
    CHECK(dpd(f) == (std::size_t{1} << n));
  }
}

TEST_CASE("catalecticant lower bound examples") {
  CHECK(catalecticant_lower_bound(x(4, 0) * x(4, 1) * x(4, 2) * x(4, 3)) == 4);
  CHECK(catalecticant_lower_bound(x(3, 0) + x(3, 1).scaled(2)) == 1);
  CHECK(catalecticant_lower_bound((x(2, 0) + x(2, 1)).pow(2)) == 1);
}

TEST_CASE("dpd dominates every single order and is scale invariant") {
  corpus::Rng rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const P f = corpus::random_poly(rng, n, 4, 5);
    const std::size_t full = dpd(f);
    for (unsigned k = 0; k <= f.degree(); ++k) CHECK(partials_rank_at_order(f, k) <= full);

    std::vector<Rational> c;
    for (std::size_t i = 0; i < n; ++i) {
      Rational v(corpus::uniform_int(rng, 1, 5));
      if (rng() % 2) v = -v / 3;
      c.push_back(v);
    }
    P g(n);
    for (const auto& [m, coef] : f.terms()) {
      Rational s = coef;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned k = 0; k < m[i]; ++k) s *= c[i];
      g.add_term(m, s);
    }
    CHECK(dpd(g) == full);
  }
}

TEST_CASE("monomial_waring examples") {
  const auto xy = monomial_waring(Monomial{1, 1});
  CHECK(xy.size() == 2);
  CHECK(decomposition_error(xy, to_complex(x(2, 0) * x(2, 1))) == 0.0);
  const auto cube = monomial_waring(Monomial{3, 0});
  CHECK(cube.size() == 1);
  CHECK(decomposition_error(cube, to_complex(x(2, 0).pow(3))) == 0.0);
  const auto xyz = monomial_waring(Monomial{1, 1, 1});
  CHECK(xyz.size() <= 4);
  CHECK(decomposition_error(xyz, to_complex(x(3, 0) * x(3, 1) * x(3, 2))) == 0.0);
  CHECK_THROWS_AS(monomial_waring(Monomial{0, 0}), DomainError);
}

TEST_CASE("monomial decompositions meet the size bound and re-expand") {
  for (const auto& a : monomials_in_box({3, 2, 2})) {
    if (a.is_one()) continue;
    const auto dec = monomial_waring(a);
    std::size_t bound = 1;
    unsigned smallest = 1000;
    for (std::size_t i = 0; i < a.nvars(); ++i)
      if (a[i] > 0) smallest = std::min(smallest, a[i]);
    for (std::size_t i = 0; i < a.nvars(); ++i) bound *= a[i] + 1;
    bound /= smallest + 1;
    CAPTURE(a.exponents());
    CHECK(dec.size() <= bound);
    CHECK(decomposition_error(dec, PC::monomial(a, ComplexF(1.0))) <= 1e-10);
    for (const auto& t : dec.terms) CHECK(t.power == a.degree());
  }
}

TEST_CASE("poly_waring examples") {
  const P t = x(1, 0);
  const auto two = poly_waring(t * t + t);
  CHECK(two.size() == 2);
  const P h = x(2, 0) * x(2, 1) + P::constant(2, Rational(1));
  const auto three = poly_waring(h);
  CHECK(three.size() == 3);
  CHECK(decomposition_error(three, to_complex(h)) == 0.0);
  const P cube = (x(2, 0) + x(2, 1)).pow(3);
  CHECK(decomposition_error(poly_waring(cube), to_complex(cube)) <= 1e-10);
  CHECK(poly_waring(P(2)).size() == 0);
}

TEST_CASE("random decompositions re-expand and satisfy the NW inequality") {
  corpus::Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const P f = corpus::random_poly(rng, n, 4, 4);
    const auto dec = poly_waring(f);
    CHECK(decomposition_error(dec, to_complex(f)) <= 1e-10);
    CHECK(dpd(f) <= dec.size() * (f.degree() + 1));
  }
}

TEST_CASE("functional_eval_plan examples") {
  const PC t = PC::variable(1, 0);
  const auto dec = poly_waring(t);
  const auto plan = functional_eval_plan(t, dec, 2, {ComplexF(0.0)});
  CHECK(plan.size() <= dec.size() * 3);
  CHECK(std::abs(plan_value(plan, PC::constant(1, 1.0))) < 1e-12);
  CHECK(std::abs(plan_value(plan, t) - 1.0) < 1e-12);
  CHECK(std::abs(plan_value(plan, t * t)) < 1e-12);

  const PC one = PC::constant(2, 1.0);
  const std::vector<ComplexF> alpha{ComplexF(2.0), ComplexF(-1.0)};
  const auto id = functional_eval_plan(one, poly_waring(one), 3, alpha);
  REQUIRE(id.size() == 1);
  CHECK(id.points[0] == alpha);
  CHECK(std::abs(id.weights[0] - 1.0) < 1e-15);

  // h = t1 t2 at (1, 1) against the symbolic operator on random g.
  corpus::Rng rng(97);
  const P h = x(2, 0) * x(2, 1);
  const std::vector<ComplexF> ones{ComplexF(1.0), ComplexF(1.0)};
  const auto hp = functional_eval_plan(to_complex(h), poly_waring(h), 3, ones);
  for (int trial = 0; trial < 10; ++trial) {
    const P g = corpus::random_poly(rng, 2, 3, 5);
    const Rational exact = apply_operator(DerivOperator<Rational>{h}, g).eval(std::vector<Rational>{1, 1});
    CHECK(std::abs(plan_value(hp, to_complex(g)) - to_complex(exact)) <= 1e-8 * std::max(1.0, std::abs(exact.get_d())));
  }
}

TEST_CASE("functional_eval_plan rejects bad input") {
  const PC t = PC::variable(1, 0);
  CHECK_THROWS_AS(functional_eval_plan(t * t, poly_waring(t), 3, {ComplexF(0.0)}), DomainError);
  CHECK_THROWS_AS(functional_eval_plan(t * t, poly_waring(t * t), 1, {ComplexF(0.0)}), DomainError);
}

TEST_CASE("plans reproduce derivative functionals on a monomial basis") {
  corpus::Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t r = 1 + rng() % 3;
    const PC h = to_complex(corpus::random_poly(rng, r, 4, 4));
    const auto alpha = random_alpha(rng, r);
    const unsigned d_prime = h.degree() + rng() % 3;
    const auto dec = poly_waring(h);
    const auto plan = functional_eval_plan(h, dec, d_prime, alpha);
    CHECK(plan.size() <= std::max<std::size_t>(1, dec.size()) * (d_prime + 1));
    CHECK(plan_error(plan, h, alpha, d_prime) <= 1e-8);
  }
}

TEST_CASE("explicit interpolation nodes") {
  corpus::Rng rng(103);
  const PC h = to_complex(corpus::random_poly(rng, 2, 3, 4));
  const auto alpha = random_alpha(rng, 2);
  std::vector<ComplexF> nodes;
  for (int k = 1; k <= 5; ++k) nodes.emplace_back(static_cast<double>(k));
  const auto plan = functional_eval_plan(h, poly_waring(h), 4, alpha, nodes);
  CHECK(plan_error(plan, h, alpha, 4) <= 1e-8);
}

TEST_CASE("a smaller interpolation circle gives the same functional") {
  corpus::Rng rng(127);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = 1 + rng() % 2;
    const PC h = to_complex(corpus::random_poly(rng, r, 3, 3));
    const auto alpha = random_alpha(rng, r);
    const auto plan = functional_eval_plan(h, poly_waring(h), 5, alpha, std::nullopt, 0.05);
    CHECK(plan_error(plan, h, alpha, 5) <= 1e-6);
  }
  const PC t = PC::variable(1, 0);
  CHECK_THROWS_AS(functional_eval_plan(t, poly_waring(t), 2, {ComplexF(0.0)}, std::nullopt, 0.0), DomainError);
}
