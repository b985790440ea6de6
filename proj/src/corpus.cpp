#include "sroabp/corpus.hpp"

#include "sroabp/linalg.hpp"

namespace sroabp::corpus {

namespace {

Matrix<Rational> unit(std::size_t w, std::size_t i, std::size_t j) {
  Matrix<Rational> m(w, w);
  m(i, j) = 1;
  return m;
}

Matrix<Rational> conjugate(const Matrix<Rational>& p, const Matrix<Rational>& pinv, const Matrix<Rational>& m) {
  return p * m * pinv;
}

Matrix<Rational> eval_bivariate(const Poly<Rational>& q, const Matrix<Rational>& x, const Matrix<Rational>& y) {
  Matrix<Rational> out(x.rows(), x.cols());
  for (const auto& [e, c] : q.terms()) {
    Matrix<Rational> v = Matrix<Rational>::identity(x.rows());
    for (unsigned k = 0; k < e[0]; ++k) v = v * x;
    for (unsigned k = 0; k < e[1]; ++k) v = v * y;
    out = out + v.scaled(c);
  }
  return out;
}

Poly<Rational> random_int_bivariate(Rng& rng, unsigned max_deg) {
  Poly<Rational> q(2);
  for (unsigned deg = 0; deg <= max_deg; ++deg)
    for (const auto& m : monomials_of_degree(2, deg)) q.add_term(m, Rational(uniform_int(rng, -2, 2)));
  return q;
}

}  // namespace

long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Matrix<Rational> random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, lo, hi);
  return m;
}

Matrix<Rational> random_unimodular(Rng& rng, std::size_t w) {
  Matrix<Rational> l = Matrix<Rational>::identity(w), u = Matrix<Rational>::identity(w);
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = uniform_int(rng, -1, 1);
      u(j, i) = uniform_int(rng, -1, 1);
    }
  return l * u;
}

std::pair<Matrix<Rational>, Matrix<Rational>> random_commuting_pair(Rng& rng, std::size_t w) {
  Matrix<Rational> x(w, w), y(w, w);
  std::size_t start = 0;
  while (start < w) {
    const std::size_t size = std::min<std::size_t>(w - start, static_cast<std::size_t>(uniform_int(rng, 1, 3)));
    const long lx = uniform_int(rng, -2, 2), ly = uniform_int(rng, -2, 2);
    for (std::size_t k = 0; k < size; ++k) {
      x(start + k, start + k) = lx;
      y(start + k, start + k) = ly;
    }
    if (size >= 2) {
      const bool curvilinear = size == 2 || uniform_int(rng, 0, 1) == 0;
      if (curvilinear) {
        // X nilpotent part is the shift S, Y's is a multiple of S or S^2.
        for (std::size_t k = 0; k + 1 < size; ++k) x(start + k, start + k + 1) = 1;
        if (size == 3) y(start, start + 2) = uniform_int(rng, 1, 2);
        else y(start, start + 1) = uniform_int(rng, 0, 1);
      } else {
        x(start, start + 1) = 1;
        y(start, start + 2) = 1;
      }
    }
    start += size;
  }
  const Matrix<Rational> p = random_unimodular(rng, w);
  const Matrix<Rational> pinv = inverse_exact(p);
  return {conjugate(p, pinv, x), conjugate(p, pinv, y)};
}

std::vector<Matrix<Rational>> random_commuting_family(Rng& rng, std::size_t w, std::size_t count, unsigned max_deg) {
  const auto [x, y] = random_commuting_pair(rng, w);
  std::vector<Matrix<Rational>> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(eval_bivariate(random_int_bivariate(rng, max_deg), x, y));
  return out;
}

CommRoabp random_comm_roabp(Rng& rng, std::size_t w, std::size_t n, unsigned d) {
  const auto [x, y] = random_commuting_pair(rng, w);
  std::vector<std::vector<Matrix<Rational>>> a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (unsigned j = 0; j <= d; ++j) a[i].push_back(eval_bivariate(random_int_bivariate(rng, 1), x, y));
  std::vector<Rational> b, c;
  for (std::size_t k = 0; k < w; ++k) {
    b.emplace_back(uniform_int(rng, -2, 2));
    c.emplace_back(uniform_int(rng, -2, 2));
  }
  if (std::all_of(b.begin(), b.end(), [](const Rational& v) { return is_zero(v); })) b[0] = 1;
  if (std::all_of(c.begin(), c.end(), [](const Rational& v) { return is_zero(v); })) c[w - 1] = 1;
  return CommRoabp(n, d, w, std::move(a), std::move(b), std::move(c));
}

Poly<Rational> random_poly(Rng& rng, std::size_t nvars, unsigned max_deg, std::size_t terms) {
  Poly<Rational> p(nvars);
  for (std::size_t k = 0; k < terms; ++k) {
    const unsigned deg = static_cast<unsigned>(uniform_int(rng, 0, max_deg));
    Monomial m(nvars);
    for (unsigned s = 0; s < deg; ++s) ++m[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(nvars) - 1))];
    Rational c(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4));
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

std::vector<Matrix<Rational>> non_curvilinear_family() { return {unit(3, 0, 1), unit(3, 0, 2)}; }

}  // namespace sroabp::corpus
