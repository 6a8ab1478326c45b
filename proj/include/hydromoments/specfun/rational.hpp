#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "hydromoments/error.hpp"

namespace hydromoments {

using Rational = mpq_class;

/// Canonical form: lowest terms, positive denominator.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::UnsupportedArgument, "non-finite value has no rational form");
  }
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool has_half_integer_denominator(const Rational& q) {
  return q.get_den() == 1 || q.get_den() == 2;
}

/// Integer value; caller guarantees is_integer(q) and that it fits a long.
inline long to_long(const Rational& q) { return q.get_num().get_si(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) {
      throw Error(ErrorCode::SingularDenominator, "zero raised to a negative power");
    }
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  Rational result(num, den);
  result.canonicalize();
  return result;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw Error(ErrorCode::UnsupportedArgument, "malformed rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace hydromoments
