#pragma once

#include <gmpxx.h>

#include <string>

namespace rbellkit {

// Sole scalar type of the library. mpq_class keeps values canonical
// (gcd(num, den) = 1, den >= 1, sign carried by the numerator).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "num" or "num/den" in base 10 with an optional leading sign on
// the numerator. Anything else (floats, whitespace, den = 0) is rejected
// with std::invalid_argument.
Rational parse_rational(const std::string& text);

// Canonical form: "num/den", "/den" omitted when den == 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// q must be integral and fit in long.
long to_long(const Rational& q);

Integer factorial(unsigned long n);

Rational binomial_uu(unsigned long n, unsigned long k);

// Generalized binomial coefficient x(x-1)...(x-k+1) / k!.
Rational binomial(const Rational& x, unsigned long k);

// (x)_k = x(x-1)...(x-k+1), empty product for k = 0.
Rational falling_factorial(const Rational& x, unsigned long k);

// <x>_k = x(x+1)...(x+k-1).
Rational rising_factorial(const Rational& x, unsigned long k);

// base^e for integer e; base != 0 required when e < 0.
Rational pow_int(const Rational& base, long e);

}  // namespace rbellkit
