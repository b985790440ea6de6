#include <doctest.h>

#include "sroabp/corpus.hpp"
#include "sroabp/linalg.hpp"
#include "sroabp/matring.hpp"
#include "sroabp/roabp.hpp"

using namespace sroabp;

namespace {

using M = Matrix<Rational>;
using P = Poly<Rational>;

M diag(std::initializer_list<long> v) {
  M m(v.size(), v.size());
  std::size_t i = 0;
  for (long x : v) {
    m(i, i) = x;
    ++i;
  }
  return m;
}

const M kNil{{0, 1}, {0, 0}};

P t(std::size_t r, std::size_t i) { return P::variable(r, i); }
P c(std::size_t r, long v) { return P::constant(r, Rational(v)); }

std::size_t span_rank(const std::vector<M>& ms) {
  if (ms.empty()) return 0;
  M stacked(ms.size(), ms[0].rows() * ms[0].cols());
  for (std::size_t k = 0; k < ms.size(); ++k)
    for (std::size_t e = 0; e < stacked.cols(); ++e) stacked(k, e) = ms[k].data()[e];
  return rank_exact(stacked);
}

std::vector<MatrixRing> corpus_rings(std::uint64_t seed, std::size_t count) {
  corpus::Rng rng(seed);
  std::vector<MatrixRing> out;
  while (out.size() < count) {
    const std::size_t w = 2 + rng() % 3, r = 1 + rng() % 3;
    out.push_back(build_ring(corpus::random_commuting_family(rng, w, r)));
  }
  return out;
}

}  // namespace

TEST_CASE("build_ring examples") {
  const MatrixRing nil = build_ring({kNil});
  CHECK(nil.normal_set == std::vector<Monomial>{Monomial{0}, Monomial{1}});
  REQUIRE(nil.border.size() == 1);
  CHECK(nil.border[0] == t(1, 0) * t(1, 0));

  const MatrixRing dd = build_ring({diag({1, 2}), diag({3, 4})});
  CHECK(dd.normal_set == std::vector<Monomial>{Monomial{0, 0}, Monomial{1, 0}});
  const P rel1 = t(2, 1) - t(2, 0) - c(2, 2);
  const P rel2 = t(2, 0) * t(2, 0) - t(2, 0).scaled(3) + c(2, 2);
  CHECK(std::find(dd.border.begin(), dd.border.end(), rel1) != dd.border.end());
  CHECK(std::find(dd.border.begin(), dd.border.end(), rel2) != dd.border.end());

  const MatrixRing id = build_ring({M::identity(3)});
  CHECK(id.normal_set == std::vector<Monomial>{Monomial{0}});
  REQUIRE(id.border.size() == 1);
  CHECK(id.border[0] == t(1, 0) - c(1, 1));

  CHECK_THROWS_AS(build_ring({kNil, kNil.transpose()}), NonCommutingError);
  CHECK_THROWS_AS(build_ring({}), DimensionError);
}

TEST_CASE("minimal_polynomial examples") {
  const P x = t(1, 0);
  CHECK(minimal_polynomial(diag({1, 1, 2})) == (x - c(1, 1)) * (x - c(1, 2)));
  const M j3{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  CHECK(minimal_polynomial(j3) == x.pow(3));
  const M companion{{0, 1}, {1, 1}};
  CHECK(minimal_polynomial(companion) == x * x - x - c(1, 1));
}

TEST_CASE("represent_in_quotient examples") {
  const MatrixRing dd = build_ring({diag({1, 2}), diag({3, 4})});
  CHECK(represent_in_quotient(dd, diag({1, 2})) == t(2, 0));
  CHECK(represent_in_quotient(dd, M::identity(2)) == c(2, 1));
  const MatrixRing single = build_ring({diag({1, 2})});
  CHECK(represent_in_quotient(single, diag({3, 4})) == t(1, 0) + c(1, 2));
  CHECK_THROWS_AS(represent_in_quotient(single, kNil), NotInRingError);
  CHECK_FALSE(try_represent(single, kNil));
}

TEST_CASE("multiplication matrices examples") {
  const MatrixRing nil = build_ring({kNil});
  REQUIRE(multiplication_matrices(nil).size() == 1);
  CHECK(multiplication_matrices(nil)[0] == M{{0, 0}, {1, 0}});
  CHECK(multiplication_matrices(build_ring({M::identity(2)}))[0] == M{{1}});
  const auto pairs = eigen(to_complex(multiplication_matrices(build_ring({diag({1, 2})}))[0]));
  REQUIRE(pairs.size() == 2);
  std::vector<double> vals{pairs[0].value.real(), pairs[1].value.real()};
  std::sort(vals.begin(), vals.end());
  CHECK(vals[0] == doctest::Approx(1.0));
  CHECK(vals[1] == doctest::Approx(2.0));
}

TEST_CASE("variety examples") {
  const auto nil = variety(build_ring({kNil}));
  REQUIRE(nil.size() == 1);
  CHECK(std::abs(nil[0].coords[0]) < 1e-9);
  CHECK(nil[0].multiplicity == 2);

  const auto d = variety(build_ring({diag({1, 2})}));
  REQUIRE(d.size() == 2);
  CHECK(std::abs(d[0].coords[0] - 1.0) < 1e-9);
  CHECK(std::abs(d[1].coords[0] - 2.0) < 1e-9);

  const auto dd = variety(build_ring({diag({1, 2}), diag({3, 4})}));
  REQUIRE(dd.size() == 2);
  CHECK(std::abs(dd[0].coords[0] - 1.0) < 1e-9);
  CHECK(std::abs(dd[0].coords[1] - 3.0) < 1e-9);
  CHECK(std::abs(dd[1].coords[0] - 2.0) < 1e-9);
  CHECK(std::abs(dd[1].coords[1] - 4.0) < 1e-9);
}

TEST_CASE("esym commutative ROABP ring") {
  const CommRoabp e = construct_esym_comm(5, 3);
  const MatrixRing ring = build_ring({e.coeff(0, 1)});
  CHECK(ring.normal_set == std::vector<Monomial>{Monomial{0}, Monomial{1}, Monomial{2}, Monomial{3}});
  const auto pts = variety(ring);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 4);
  CHECK(variety_size(ring) == 1);
}

TEST_CASE("ring invariants over the random corpus") {
  corpus::Rng rng(61);
  const auto rings = corpus_rings(67, 25);
  for (const auto& ring : rings) {
    CAPTURE(ring.w);
    CAPTURE(ring.r);
    CHECK(ring.normal_set.front().is_one());
    for (const auto& a : ring.normal_set)
      for (std::size_t i = 0; i < ring.r; ++i)
        if (a[i] > 0) CHECK(ring.ns_index(a / Monomial::unit(ring.r, i)).has_value());

    CHECK(ring.m() <= ring.w * ring.w);
    CHECK(ring.m() == span_rank(ring.normal_values));
    CHECK(ring.m() == span_rank([&] {
            std::vector<M> all = ring.normal_values;
            for (const auto& b : ring.border_monomials) all.push_back(eval_at_matrices(P::monomial(b), ring.generators));
            return all;
          }()));
    for (const auto& g : ring.border) CHECK(eval_at_matrices(g, ring.generators).is_zero());

    // Ring morphism: represent(B1 B2) = reduce(represent(B1) represent(B2)).
    for (int trial = 0; trial < 4; ++trial) {
      const P p1 = corpus::random_poly(rng, ring.r, 3, 4), p2 = corpus::random_poly(rng, ring.r, 3, 4);
      const M b1 = eval_at_matrices(p1, ring.generators), b2 = eval_at_matrices(p2, ring.generators);
      CHECK(represent_in_quotient(ring, b1 * b2) ==
            reduce_exact(ring, represent_in_quotient(ring, b1) * represent_in_quotient(ring, b2)));
      CHECK(reduce_exact(ring, p1) == represent_in_quotient(ring, b1));
    }

    const auto pts = variety(ring);
    CHECK(pts.size() <= ring.m());
    CHECK(pts.size() == variety_size(ring));
    std::size_t total = 0;
    for (const auto& p : pts) total += p.multiplicity;
    CHECK(total == ring.m());
    for (std::size_t i = 0; i < ring.r; ++i) {
      const Poly<ComplexF> mp = to_complex(minimal_polynomial(ring.generators[i]));
      for (const auto& p : pts) {
        const std::vector<ComplexF> x{p.coords[i]};
        CHECK(std::abs(mp.eval(x)) < 1e-7);
      }
    }
  }
}

TEST_CASE("non-curvilinear local ring") {
  const MatrixRing ring = build_ring(corpus::non_curvilinear_family());
  CHECK(ring.m() == 3);
  const auto pts = variety(ring);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 3);
}

TEST_CASE("variety is deterministic for a fixed seed") {
  const auto rings = corpus_rings(71, 5);
  for (const auto& ring : rings) {
    const auto a = variety(ring, kDefaultTol, 9), b = variety(ring, kDefaultTol, 9);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].coords == b[k].coords);
  }
}
