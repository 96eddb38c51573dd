#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace sigrate {

// Arbitrary-precision rational scalar. All exact-mode computations in this
// library go through this type; binary64 exists only for sampling and for
// rendering.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or a plain integer, canonicalizing to lowest terms.
// Decimal notation is rejected: silently rounding an input would invalidate
// every exact identity downstream.
Rational parse_rational(const std::string& text);

// Lowest-terms rendering, "p" when the denominator is 1.
std::string to_string(const Rational& x);

double to_double(const Rational& x);
inline double to_double(double x) { return x; }

inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }
double abs_value(double x);

// base^exponent, exact.
Rational rational_pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);
Integer binomial(unsigned long n, unsigned long k);

// n! / (parts_1! ... parts_m!); the parts must sum to n.
Integer multinomial(unsigned n, const std::vector<unsigned>& parts);

}  // namespace sigrate
