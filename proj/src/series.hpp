#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace rbellkit {

// Truncated formal power series c_0 + c_1 t + ... + c_N t^N with exact
// rational coefficients. All arithmetic is exact modulo t^{N+1}. The
// coefficients are ordinary; exponential-generating-function values are
// recovered through egf_coeff.
//
// Binary operations require equal orders; there is no silent truncation.
// Use truncated()/extended() to change order explicitly.
class Series {
 public:
  // order = coeffs.size() - 1; empty input is a structural error.
  explicit Series(std::vector<Rational> coeffs);

  static Series zero(int order);
  static Series one(int order);
  static Series constant(const Rational& c, int order);
  static Series identity(int order);  // t, order >= 1

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int j) const;  // index error outside [0, order]
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const Series&) const = default;

  // "1 - 2t + 4t^2" style, for diagnostics and error messages.
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// Length must equal order + 1.
Series make_series(std::vector<Rational> coeffs, int order);

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series negate(const Series& f);
Series scale(const Rational& c, const Series& f);
Series add_constant(const Series& f, const Rational& c);

// Cauchy product truncated at the common order.
Series mul(const Series& f, const Series& g);

Series truncated(const Series& f, int order);  // 0 <= order <= f.order()
Series extended(const Series& f, int order);   // zero padding, order >= f.order()

// Multiplicative inverse; requires c_0 != 0.
Series reciprocal(const Series& f);

// exp(f); requires c_0 == 0. Coefficients via the ODE g' = f' g.
Series exp_series(const Series& f);

// log(f); requires c_0 == 1.
Series log_series(const Series& f);

// f^q. Integer q uses repeated squaring (negative q additionally requires
// c_0 != 0). Non-integer q requires c_0 == 1 and uses exp(q log f).
Series pow_rational(const Series& f, const Rational& q);

// f(g(t)); requires g.c_0 == 0 and equal orders.
Series compose(const Series& f, const Series& g);

// Compositional inverse g with f(g(t)) = t; requires c_0 == 0, c_1 != 0.
// Newton iteration g <- g - (f o g - t) / (f' o g) with order doubling.
Series comp_inverse(const Series& f);

// Returns order N-1 with coefficients (j+1) c_{j+1}; requires N >= 1.
Series derivative(const Series& f);

// n! * c_n; requires 0 <= n <= order.
Rational egf_coeff(const Series& f, int n);

}  // namespace rbellkit
