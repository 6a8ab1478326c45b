#pragma once

#include <boost/math/special_functions/digamma.hpp>

#include <cmath>
#include <numbers>

#include "hydromoments/specfun/exact_value.hpp"

namespace hydromoments {

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonpositiveArgument, "log_gamma needs x > 0");
  return std::lgamma(x);
}

/// Gamma(x) exactly, for positive integers and half-integers.
///
/// Gamma(m) = (m-1)!  and  Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi).
inline ExactValue gamma_exact(const Rational& x) {
  if (x <= 0) throw Error(ErrorCode::NonpositiveArgument, "gamma_exact needs x > 0");
  if (!has_half_integer_denominator(x)) {
    throw Error(ErrorCode::UnsupportedArgument,
                "gamma_exact supports integer and half-integer arguments, got " + to_string(x));
  }
  mpz_class value;
  if (x.get_den() == 1) {
    mpz_fac_ui(value.get_mpz_t(), x.get_num().get_ui() - 1);
    return ExactValue(Rational(value));
  }
  const unsigned long m = (x.get_num().get_ui() - 1) / 2;  // x = m + 1/2
  mpz_class twom_fact, m_fact, four_m;
  mpz_fac_ui(twom_fact.get_mpz_t(), 2 * m);
  mpz_fac_ui(m_fact.get_mpz_t(), m);
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
  Rational coeff(twom_fact, four_m * m_fact);
  coeff.canonicalize();
  return ExactValue(coeff, 1);
}

/// Rising factorial (a)_j = a (a+1) ... (a+j-1), with (a)_0 = 1.
///
/// Works unchanged for Rational (exact) and double (float).
template <class T>
T pochhammer(const T& a, long j) {
  T result(1);
  for (long i = 0; i < j; ++i) result *= a + T(i);
  return result;
}

/// Binomial coefficient as an exact integer.
inline Rational binomial(long n, long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

inline double digamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonpositiveArgument, "digamma needs x > 0");
  return boost::math::digamma(x);
}

/// psi(n + 1/2) = rational_part - euler_gamma - 2 ln 2, with the constants kept
/// symbolic so that brackets in which they cancel stay exact.
struct HalfIntegerDigamma {
  Rational rational_part;

  double value() const {
    return rational_part.get_d() - euler_gamma - 2.0 * std::numbers::ln2;
  }
};

inline HalfIntegerDigamma digamma_half_exact(long n) {
  if (n < 0) throw Error(ErrorCode::NonpositiveArgument, "digamma_half_exact needs n >= 0");
  Rational sum(0);
  for (long k = 1; k <= n; ++k) sum += Rational(1, 2 * k - 1);
  sum *= 2;
  return {sum};
}

}  // namespace hydromoments
