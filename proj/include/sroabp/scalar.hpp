#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

namespace sroabp {

/// Exact rational scalar. GMP keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Double-precision complex scalar used by the numeric layer.
using ComplexF = std::complex<double>;

/// Default relative tolerance of the numeric layer.
inline constexpr double kDefaultTol = 1e-9;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ComplexF& x) { return x == ComplexF(0.0, 0.0); }

inline ComplexF to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
inline ComplexF to_complex(const ComplexF& x) { return x; }

inline double magnitude(const Rational& x) { return std::abs(x.get_d()); }
inline double magnitude(const ComplexF& x) { return std::abs(x); }

template <class S>
S scalar_from_int(long v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return Rational(v);
  } else {
    return S(static_cast<double>(v));
  }
}

/// Converts between scalar types; anything other than the identity goes
/// through ComplexF.
template <class T, class S>
T scalar_cast(const S& x) {
  if constexpr (std::is_same_v<T, S>) {
    return x;
  } else {
    return T(to_complex(x));
  }
}

/// k! as a scalar of type S (exact for Rational).
template <class S>
S factorial(unsigned k) {
  if constexpr (std::is_same_v<S, Rational>) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
  } else {
    double f = 1.0;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return S(f);
  }
}

/// e! / (e - a)! for a <= e.
template <class S>
S falling_factorial(unsigned e, unsigned a) {
  if constexpr (std::is_same_v<S, Rational>) {
    mpz_class f = 1;
    for (unsigned i = 0; i < a; ++i) f *= (e - i);
    return Rational(f);
  } else {
    double f = 1.0;
    for (unsigned i = 0; i < a; ++i) f *= (e - i);
    return S(f);
  }
}

template <class S>
S binomial(unsigned n, unsigned k) {
  if (k > n) return S(0);
  if constexpr (std::is_same_v<S, Rational>) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
  } else {
    double b = 1.0;
    for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return S(b);
  }
}

/// Serializes as "p/q" (the denominator is always written).
std::string to_string(const Rational& x);

/// Accepts "p", "p/q" with optional sign; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Best rational approximation with denominator <= max_den (continued
/// fractions).
Rational rationalize(double x, long max_den);

}  // namespace sroabp
