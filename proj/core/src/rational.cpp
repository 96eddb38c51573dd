#include "sigrate/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sigrate {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational value;
  try {
    value = Rational(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational literal (use \"p/q\" or an integer): " + text);
  }
  if (sgn(value.get_den()) == 0) throw std::invalid_argument("zero denominator in: " + text);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& x) { return x.get_str(); }

double to_double(const Rational& x) { return x.get_d(); }

double abs_value(double x) { return std::fabs(x); }

Rational rational_pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational square = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= square;
    square *= square;
    e >>= 1u;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  if (k > n) return Integer(0);
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Integer multinomial(unsigned n, const std::vector<unsigned>& parts) {
  unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
  if (total != n) throw std::invalid_argument("multinomial parts do not sum to n");
  Integer result(1);
  unsigned remaining = n;
  for (unsigned part : parts) {
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

}  // namespace sigrate
