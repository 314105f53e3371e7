#ifndef SODELIE_POLYFIELD_RATIONAL_HPP
#define SODELIE_POLYFIELD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sodelie {

/// Arbitrary-precision rational number. Always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", or a finite decimal such as "-0.125" exactly.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

/// n/d in lowest terms. mpq_class(n, d) alone does not canonicalize.
inline Rational ratio(long numerator, long denominator) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace sodelie

#endif
