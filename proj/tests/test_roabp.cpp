#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "sroabp/corpus.hpp"
#include "sroabp/roabp.hpp"

using namespace sroabp;

namespace {

using P = Poly<Rational>;

template <class R>
Rational eval_at(const R& r, const std::vector<Rational>& x) {
  return r.template eval<Rational>(std::span<const Rational>(x));
}

std::vector<Rational> random_point(corpus::Rng& rng, std::size_t n) {
  std::vector<Rational> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(Rational(corpus::uniform_int(rng, -20, 20)) / corpus::uniform_int(rng, 1, 5));
  return x;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

// Interleaved (x1, y1, x2, y2, ...) for the paired product's variable layout.
std::vector<std::size_t> interleaved(std::size_t n) {
  std::vector<std::size_t> o;
  for (std::size_t i = 0; i < n; ++i) {
    o.push_back(i);
    o.push_back(n + i);
  }
  return o;
}

}  // namespace

TEST_CASE("evaluation examples") {
  CHECK(eval_at(construct_esym_comm(5, 3), std::vector<Rational>(5, 1)) == 10);
  CHECK(eval_at(construct_power_comm(4, 3), std::vector<Rational>(4, 1)) == 64);
  CHECK(eval_at(construct_esym_diag(5, 3), std::vector<Rational>(5, 1)) == 10);
  CHECK(eval_at(construct_power_diag(4, 3), std::vector<Rational>(4, 1)) == 64);

  // A zero layer kills the product.
  Roabp r = to_roabp(construct_esym_comm(3, 2));
  for (std::size_t a = 0; a < r.layers[1].rows(); ++a)
    for (std::size_t b = 0; b < r.layers[1].cols(); ++b) r.layers[1](a, b) = Univariate<Rational>();
  CHECK(eval_at(r, {2, 3, 5}) == 0);
  CHECK_THROWS_AS(eval_at(r, {1, 2}), DimensionError);
}

TEST_CASE("expand examples") {
  CHECK(expand(construct_esym_comm(3, 2)) == oracle::esym(3, 2));
  DiagRoabp<Rational> ones{2, 1, {{Univariate<Rational>{1, 1}, Univariate<Rational>{1, 1}}}, {Rational(1)}};
  const P x1 = P::variable(2, 0), x2 = P::variable(2, 1), one = P::constant(2, Rational(1));
  CHECK(expand(ones) == (one + x1) * (one + x2));
  const CommRoabp e = construct_esym_comm(3, 2);
  const CommRoabp zero(3, e.d(), e.w(), e.coeffs(), std::vector<Rational>(e.w(), Rational(0)), e.c());
  CHECK(expand(zero).is_zero());
  CHECK_THROWS_AS(expand(construct_esym_comm(20, 2)), GuardError);
}

TEST_CASE("constructions match brute force") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (unsigned d = 0; d <= std::min<std::size_t>(n, 4); ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(expand(construct_esym_comm(n, d)) == oracle::esym(n, d));
      CHECK(expand(construct_esym_diag(n, d)) == oracle::esym(n, d));
    }
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned d = 0; d <= 3; ++d) {
      CAPTURE(n);
      CAPTURE(d);
      CHECK(expand(construct_power_comm(n, d)) == oracle::power_sum(n, d));
      CHECK(expand(construct_power_diag(n, d)) == oracle::power_sum(n, d));
    }
}

TEST_CASE("construction parameters") {
  CHECK_THROWS_AS(construct_esym_comm(3, 5), DomainError);
  CHECK(construct_esym_comm(5, 3).w() == 4);
  CHECK(construct_power_comm(4, 3).w() == 4);
  CHECK(construct_esym_diag(5, 3).w() == 6);
  CHECK(construct_power_diag(3, 2).w() == 7);
  CHECK(expand(construct_esym_comm(4, 0)) == P::constant(4, Rational(1)));
  CHECK(expand(construct_power_comm(4, 0)) == P::constant(4, Rational(1)));
  CHECK(expand(construct_power_comm(2, 2)) == oracle::power_sum(2, 2));
  CHECK_THROWS_AS(construct_esym_diag(3, 2, std::vector<Rational>{0, 1, 1, 2}), DomainError);
  CHECK_THROWS_AS(construct_power_diag(2, 2, std::vector<Rational>{0, 1, 2, 3, 3}), DomainError);

  const std::vector<Rational> nodes{Rational(-2), Rational(1) / 2, Rational(3), Rational(7)};
  CHECK(expand(construct_esym_diag(3, 2, nodes)) == oracle::esym(3, 2));
}

TEST_CASE("diagonal and commutative constructions agree pointwise") {
  corpus::Rng rng(41);
  const auto ed = construct_esym_diag(5, 3);
  const auto ec = construct_esym_comm(5, 3);
  const auto pd = construct_power_diag(3, 3);
  const auto pc = construct_power_comm(3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x5 = random_point(rng, 5);
    CHECK(eval_at(ed, x5) == eval_at(ec, x5));
    CHECK(eval_at(ed, x5) == oracle::esym(5, 3).eval(x5));
    const auto x3 = random_point(rng, 3);
    CHECK(eval_at(pd, x3) == eval_at(pc, x3));
  }
}

TEST_CASE("commutativity checks") {
  const CommRoabp e = construct_esym_comm(4, 3);
  const Matrix<Rational>& a = e.coeff(0, 1);
  const std::vector<Matrix<Rational>> powers{Matrix<Rational>::identity(4), a, a * a};
  CHECK(check_commuting(powers));
  const std::vector<Matrix<Rational>> bad{Matrix<Rational>{{0, 1}, {0, 0}}, Matrix<Rational>{{0, 0}, {1, 0}}};
  CHECK_FALSE(check_commuting(bad));
  CHECK(check_commuting(std::vector<Matrix<Rational>>{a}));
  const std::vector<Matrix<Rational>> mixed{Matrix<Rational>::identity(2), Matrix<Rational>::identity(3)};
  CHECK_THROWS_AS(check_commuting(mixed), DimensionError);

  std::vector<std::vector<Matrix<Rational>>> coeffs{{bad[0], bad[1]}};
  CHECK_THROWS_AS(CommRoabp(1, 1, 2, coeffs, {1, 0}, {0, 1}), NonCommutingError);
}

TEST_CASE("nisan profile examples") {
  const P f = oracle::paired_product(2);
  const auto inter = nisan_profile(f, interleaved(2));
  CHECK(inter.ranks == std::vector<std::size_t>{2, 1, 2});
  CHECK(inter.width == 2);
  CHECK(inter.size == 5);
  const auto sep = nisan_profile(f, identity_order(4));
  CHECK(sep.ranks[1] == 4);
  CHECK(sep.width == 4);

  P mono = P::constant(5, Rational(1));
  for (std::size_t i = 0; i < 5; ++i) mono = mono * P::variable(5, i);
  std::vector<std::size_t> order{3, 0, 4, 1, 2};
  CHECK(nisan_profile(mono, order).ranks == std::vector<std::size_t>(4, 1));
}

TEST_CASE("nisan size is invariant under consistent relabeling") {
  corpus::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const P f = corpus::random_poly(rng, n, 4, 6);
    std::vector<std::size_t> perm = identity_order(n), order = identity_order(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::shuffle(order.begin(), order.end(), rng);
    // g(x) = f with variable i renamed perm[i]; order follows the renaming.
    P g(n);
    for (const auto& [m, c] : f.terms()) {
      Monomial e(n);
      for (std::size_t i = 0; i < n; ++i) e[perm[i]] = m[i];
      g.add_term(e, c);
    }
    std::vector<std::size_t> moved(n);
    for (std::size_t k = 0; k < n; ++k) moved[k] = perm[order[k]];
    const auto pf = nisan_profile(f, order), pg = nisan_profile(g, moved);
    CHECK(pf.size == pg.size);
    CHECK(pf.ranks == pg.ranks);
  }
}

TEST_CASE("esym construction is width-optimal up to the characterization") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (unsigned d = 0; d <= std::min<std::size_t>(n, 4); ++d)
      CHECK(nisan_profile(expand(construct_esym_comm(n, d)), identity_order(n)).width <= d + 1);
}

TEST_CASE("curve form of a diagonal ROABP") {
  corpus::Rng rng(47);
  const auto r = construct_esym_diag(3, 2);
  const auto cf = to_curve_form(r);
  CHECK(cf.nodes.size() == r.w());
  for (const auto& g : cf.factors) CHECK(g.individual_degrees()[0] <= r.w() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_point(rng, 3);
    CHECK(cf.eval(std::span<const Rational>(x)) == eval_at(r, x));
  }

  DiagRoabp<Rational> one{2, 1, {{Univariate<Rational>{1, 2}, Univariate<Rational>{3, 1}}}, {Rational(1)}};
  const auto cf1 = to_curve_form(one);
  CHECK(cf1.nodes.size() == 1);
  const std::vector<Rational> x{5, 7};
  CHECK(cf1.eval(std::span<const Rational>(x)) == Rational(11 * 10));

  DiagRoabp<Rational> empty{2, 1, {}, {}};
  CHECK(to_curve_form(empty).eval(std::span<const Rational>(x)) == 0);
  CHECK(expand(empty).is_zero());

  const auto pd = construct_power_diag(2, 2);
  const auto cfp = to_curve_form(pd);
  for (int trial = 0; trial < 10; ++trial) {
    const auto y = random_point(rng, 2);
    CHECK(cfp.eval(std::span<const Rational>(y)) == eval_at(pd, y));
  }
}

TEST_CASE("representation conversions are exact") {
  corpus::Rng rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const CommRoabp cr = corpus::random_comm_roabp(rng, 1 + rng() % 4, 1 + rng() % 3, 1 + rng() % 2);
    const P f = expand(cr);
    const Roabp general = to_roabp(cr);
    general.validate();
    CHECK(expand(general) == f);
    CHECK(expand(to_comm(general)) == f);
  }
  const auto d = construct_esym_diag(4, 2);
  CHECK(expand(to_roabp(d)) == oracle::esym(4, 2));
  CHECK(expand(to_comm(d)) == oracle::esym(4, 2));

  Roabp shuffled = to_roabp(construct_esym_comm(3, 1));
  shuffled.order = {2, 0, 1};
  CHECK(expand(shuffled) == oracle::esym(3, 1));
  shuffled.order = {0, 0, 1};
  CHECK_THROWS_AS(shuffled.validate(), DimensionError);
}
