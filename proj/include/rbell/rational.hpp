#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rbell {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegerResult : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses `p/q` or an integer literal. Decimals and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1,1/2,1/3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n
Integer multinomial(unsigned n, const std::vector<unsigned>& parts);

Rational power(const Rational& base, unsigned exponent);

bool is_integer(const Rational& value);
/// Throws NonIntegerResult when `value` has a nontrivial denominator.
Integer to_integer(const Rational& value, std::string_view context);

}  // namespace rbell
