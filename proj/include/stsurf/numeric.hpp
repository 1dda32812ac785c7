#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace stsurf {

/// Exact rational used for all combinatorial geometry (cut offsets, crossing
/// parameters, transverse lengths).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Variable-precision real used for irrational directions. Precision is set
/// globally through PrecisionScope.
using Real = boost::multiprecision::mpfr_float;

class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned decimal_digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(decimal_digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Parses "a", "-a", "a/b" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

inline Rational floor_rational(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

inline Rational frac(const Rational& r) { return r - floor_rational(r); }

}  // namespace stsurf
