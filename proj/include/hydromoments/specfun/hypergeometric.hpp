#pragma once

#include <cmath>
#include <vector>

#include "hydromoments/specfun/exact_value.hpp"
#include "hydromoments/specfun/summation.hpp"

namespace hydromoments {

/// Relative error bound above which a floating-point sum is considered lost to
/// cancellation.
inline constexpr double cancellation_tolerance = 1e-8;

/// Auto mode re-sums exactly above this bound.
inline constexpr double resummation_tolerance = 1e-12;

/// A terminating generalized hypergeometric series at unit argument,
///   sum_{j=0}^{k} prod (top_i)_j / prod (bottom_i)_j / j!,
/// where top[0] = -k.
template <class T>
struct HypSumSpec {
  std::vector<T> top;
  std::vector<T> bottom;
  /// k + 1.
  long terms = 0;
};

namespace detail {

inline bool is_nonpositive_integer(const Rational& x) { return is_integer(x) && x <= 0; }
inline bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

template <class T>
void validate(const HypSumSpec<T>& spec) {
  if (spec.top.empty() || spec.terms < 1) {
    throw Error(ErrorCode::NonTerminating, "series needs a leading top parameter -k");
  }
  const long k = spec.terms - 1;
  if (!(spec.top.front() == T(-k))) {
    throw Error(ErrorCode::NonTerminating, "first top parameter must equal -(terms-1)");
  }
  for (const T& b : spec.bottom) {
    if (is_nonpositive_integer(b) && -b < T(k)) {
      throw Error(ErrorCode::PoleInBottomParameter, "bottom parameter vanishes before termination");
    }
  }
}

/// Exact sum without the half-integer restriction; any rational parameters.
inline Rational terminating_sum(const HypSumSpec<Rational>& spec) {
  Rational term(1), sum(1);
  for (long j = 0; j + 1 < spec.terms; ++j) {
    for (const Rational& a : spec.top) term *= a + j;
    for (const Rational& b : spec.bottom) term /= b + j;
    term /= j + 1;
    sum += term;
  }
  return sum;
}

}  // namespace detail

/// Exact evaluation; parameters must be integers or half-integers.
inline Rational hyp_sum(const HypSumSpec<Rational>& spec) {
  detail::validate(spec);
  for (const auto* list : {&spec.top, &spec.bottom}) {
    for (const Rational& p : *list) {
      if (!has_half_integer_denominator(p)) {
        throw Error(ErrorCode::UnsupportedArgument,
                    "exact series needs integer or half-integer parameters, got " + to_string(p));
      }
    }
  }
  return detail::terminating_sum(spec);
}

/// Floating-point evaluation with compensated summation and an error bound
/// that accounts for cancellation between the signed terms.
inline BoundedValue hyp_sum(const HypSumSpec<double>& spec) {
  detail::validate(spec);
  const double steps_per_term =
      2.0 * static_cast<double>(spec.top.size() + spec.bottom.size()) + 1.0;
  TrackedSum sum;
  double term = 1.0;
  sum.add(term, 0.0);
  for (long j = 0; j + 1 < spec.terms; ++j) {
    const double jd = static_cast<double>(j);
    for (double a : spec.top) term *= a + jd;
    for (double b : spec.bottom) term /= b + jd;
    term /= jd + 1.0;
    sum.add(term, steps_per_term * (jd + 1.0));
  }
  return sum.result();
}

}  // namespace hydromoments
