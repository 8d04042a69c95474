#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rbellkit {

Rational parse_rational(const std::string& text) {
  // Validate by hand before handing the string to gmp: mpq_set_str is
  // permissive about things like "3/" and silently builds den = 0.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw std::invalid_argument("not a rational: '" + text + "'");
  bool has_den = num_end < text.size();
  if (has_den) {
    if (text[num_end] != '/') throw std::invalid_argument("not a rational: '" + text + "'");
    std::size_t den_end = digits(num_end + 1);
    if (den_end == num_end + 1 || den_end != text.size())
      throw std::invalid_argument("not a rational: '" + text + "'");
  }
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (has_den && mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("not an integer: " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::domain_error("integer out of range: " + to_string(q));
  return q.get_num().get_si();
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Rational binomial_uu(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

Rational falling_factorial(const Rational& x, unsigned long k) {
  Rational acc(1);
  for (unsigned long i = 0; i < k; ++i) acc *= x - Rational(static_cast<long>(i));
  return acc;
}

Rational rising_factorial(const Rational& x, unsigned long k) {
  Rational acc(1);
  for (unsigned long i = 0; i < k; ++i) acc *= x + Rational(static_cast<long>(i));
  return acc;
}

Rational binomial(const Rational& x, unsigned long k) {
  return falling_factorial(x, k) / Rational(factorial(k));
}

Rational pow_int(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow_int(Rational(1) / base, -e);
  }
  Rational acc(1);
  Rational sq = base;
  unsigned long u = static_cast<unsigned long>(e);
  while (u != 0) {
    if (u & 1UL) acc *= sq;
    u >>= 1UL;
    if (u != 0) sq *= sq;
  }
  return acc;
}

}  // namespace rbellkit
