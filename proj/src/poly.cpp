#include "poly.hpp"

#include <stdexcept>

#include "rbell.hpp"

namespace rbellkit {

namespace {

// A / t as a series of order A.order() - 1; requires A(0) = 0.
Series divide_by_t(const Series& A) {
  std::vector<Rational> v(static_cast<std::size_t>(A.order()));
  for (int j = 1; j <= A.order(); ++j) v[static_cast<std::size_t>(j - 1)] = A.coeff(j);
  return Series(std::move(v));
}

void check_budget(const FamilySpec& spec, int n) {
  if (n < 0) throw std::out_of_range("polynomial index must be nonnegative");
  if (n > spec.budget())
    throw std::out_of_range("index " + std::to_string(n) + " exceeds truncation budget " +
                            std::to_string(spec.budget()));
}

}  // namespace

FamilySpec::FamilySpec(Series a, Series b, Series h)
    : A(std::move(a)), B(std::move(b)), H(std::move(h)) {
  if (A.order() < 1) throw std::invalid_argument("family spec: A needs order >= 1");
  if (A.order() != B.order() || A.order() != H.order())
    throw std::invalid_argument("family spec: A, B, H must share one truncation order");
  if (A.coeff(0) != 0) throw std::domain_error("family spec: A(0) must be 0");
  if (A.coeff(1) != 1) throw std::domain_error("family spec: A'(0) must be 1");
  if (B.coeff(0) != 1) throw std::domain_error("family spec: B(0) must be 1");
}

FamilySpec FamilySpec::from_families(const SequenceFamily& a, const SequenceFamily& b,
                                     int order) {
  return FamilySpec(a.to_series(order, Rational(0)), b.b_series(order), Series::one(order));
}

Rational p_bivariate(const Rational& alpha, const Rational& x, const Rational& y,
                     const FamilySpec& spec, int n) {
  check_budget(spec, n);
  const Series ahat = truncated(divide_by_t(spec.A), n);          // A/t, constant term 1
  const Series aprime = truncated(derivative(spec.A), n);         // A', constant term 1
  Series acc = pow_rational(ahat, Rational(-alpha));              // (t/A)^alpha
  if (x != 0) acc = mul(acc, pow_rational(aprime, x));
  if (y != 0) acc = mul(acc, pow_rational(truncated(spec.B, n), y));
  acc = mul(acc, truncated(spec.H, n));
  return egf_coeff(acc, n);
}

Rational p_number(const Rational& alpha, const FamilySpec& spec, int n) {
  return p_bivariate(alpha, Rational(0), Rational(0), spec, n);
}

Rational t_poly(const Rational& alpha, const Rational& x, const Series& A, int n) {
  FamilySpec spec(A, Series::one(A.order()), Series::one(A.order()));
  return p_bivariate(alpha, x, Rational(0), spec, n);
}

Rational laguerre_like(const Rational& alpha, const Rational& beta, const Rational& x, int n) {
  if (n < 0) throw std::out_of_range("polynomial index must be nonnegative");
  Series one_minus_t = Series::one(n);
  if (n >= 1) one_minus_t = sub(one_minus_t, Series::identity(n));
  const Series inner = scale(x, add_constant(pow_rational(one_minus_t, beta), Rational(-1)));
  const Series gf = mul(pow_rational(one_minus_t, alpha), exp_series(inner));
  return gf.coeff(n);
}

namespace {

// (t / (e^t - 1))^alpha e^{xt} evaluated at EGF index n; shares its shape
// with bernoulli_second below.
Series bernoulli_first_gf(const Rational& alpha, const Rational& x, int n) {
  std::vector<Rational> ahat(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    ahat[static_cast<std::size_t>(j)] = Rational(1) / Rational(factorial(static_cast<unsigned long>(j) + 1));
  const Series expxt = exp_series(scale(x, n >= 1 ? Series::identity(n) : Series::zero(0)));
  return mul(pow_rational(Series(std::move(ahat)), Rational(-alpha)), expxt);
}

Series bernoulli_second_gf(const Rational& alpha, const Rational& x, int n) {
  std::vector<Rational> ahat(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational c = Rational(1) / Rational(j + 1);  // ln(1+t)/t
    ahat[static_cast<std::size_t>(j)] = (j % 2 == 0) ? c : Rational(-c);
  }
  Series one_plus_t = Series::one(n);
  if (n >= 1) one_plus_t = add(one_plus_t, Series::identity(n));
  return mul(pow_rational(Series(std::move(ahat)), Rational(-alpha)), pow_rational(one_plus_t, x));
}

}  // namespace

Rational bernoulli_first(const Rational& alpha, const Rational& x, int n) {
  if (n < 0) throw std::out_of_range("polynomial index must be nonnegative");
  return egf_coeff(bernoulli_first_gf(alpha, x, n), n);
}

Rational bernoulli_second(const Rational& alpha, const Rational& x, int n) {
  if (n < 0) throw std::out_of_range("polynomial index must be nonnegative");
  return egf_coeff(bernoulli_second_gf(alpha, x, n), n);
}

namespace {

void check_closed_args(int n, int p, const Rational& m, int r, int s) {
  if (n < 0 || p < 0) throw std::out_of_range("closed form needs n, p >= 0");
  if (m == 0) throw std::domain_error("closed form needs m != 0");
  if (r < 0 || s < 0) throw std::invalid_argument("closed form needs r, s >= 0");
}

}  // namespace

Rational bernoulli_first_closed(int n, int p, const Rational& m, int r) {
  check_closed_args(n, p, m, r, 0);
  const Rational w = whitney_first(m, r, n + p, p);
  return w / (pow_int(m, n) * binomial_uu(static_cast<unsigned long>(n + p),
                                          static_cast<unsigned long>(p)));
}

Rational bernoulli_second_closed(int n, int p, const Rational& m, int r) {
  check_closed_args(n, p, m, r, 0);
  const Rational w = whitney_second(m, r, n + p, p);
  return w / (pow_int(m, n) * binomial_uu(static_cast<unsigned long>(n + p),
                                          static_cast<unsigned long>(p)));
}

Rational bernoulli_first_mixed(int n, int p, const Rational& m, int r, int s) {
  check_closed_args(n, p, m, r, s);
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {
    const Rational c = binomial_uu(static_cast<unsigned long>(k + p), static_cast<unsigned long>(p));
    sum += whitney_second(m, r, n, k) * whitney_first(m, s, k + p, p) / c;
  }
  return sum / pow_int(m, n);
}

Rational bernoulli_second_mixed(int n, int p, const Rational& m, int r, int s) {
  check_closed_args(n, p, m, r, s);
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {
    const Rational c = binomial_uu(static_cast<unsigned long>(k + p), static_cast<unsigned long>(p));
    sum += whitney_first(m, r, n, k) * whitney_second(m, s, k + p, p) / c;
  }
  return sum / pow_int(m, n);
}

}  // namespace rbellkit
