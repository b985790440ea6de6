#include "sroabp/scalar.hpp"

#include <cmath>
#include <string>

#include "sroabp/errors.hpp"

namespace sroabp {

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("invalid rational literal: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite value");
  // Convergents h/k of the continued fraction of x.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(rest);
    mpz_class ai(a);
    mpz_class h2 = ai * h1 + h0;
    mpz_class k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = rest - a;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  if (k1 == 0) return Rational(0);
  Rational q(h1, k1);
  q.canonicalize();
  return q;
}

}  // namespace sroabp
