#include "sroabp/monomial.hpp"

#include <algorithm>

namespace sroabp {

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = a.nvars(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool monomial_less(MonomialOrder order, const Monomial& a, const Monomial& b) {
  return order == MonomialOrder::kGradedLex ? graded_lex_less(a, b) : lex_less(a, b);
}

namespace {

void fill_degree(std::size_t var, unsigned remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.nvars()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[var] = e;
    fill_degree(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(0, degree, cur, out);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

std::vector<Monomial> monomials_in_box(const std::vector<unsigned>& bound) {
  std::vector<Monomial> out;
  Monomial cur(bound.size());
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < bound.size() && cur[i] == bound[i]) cur[i++] = 0;
    if (i == bound.size()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

}  // namespace sroabp
