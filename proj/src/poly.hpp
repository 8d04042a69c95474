#pragma once

#include "rational.hpp"
#include "seq_family.hpp"
#include "series.hpp"

namespace rbellkit {

// Generating data for the bivariate families: series A, B, H at a common
// truncation order M with A(0) = 0, A'(0) = 1, B(0) = 1. Values with index
// n are computable for n <= M - 1 (the budget); A must reach one order
// higher than n because t/A and A' drop one order.
struct FamilySpec {
  Series A;
  Series B;
  Series H;

  FamilySpec(Series a, Series b, Series h);

  int budget() const { return A.order() - 1; }

  // A from the a-role of `a` (requires a_1 = 1), B from the b-role of `b`
  // (requires b_1 = 1), H = 1.
  static FamilySpec from_families(const SequenceFamily& a, const SequenceFamily& b, int order);
};

// n! [t^n] (t/A)^alpha H.
Rational p_number(const Rational& alpha, const FamilySpec& spec, int n);

// n! [t^n] (t/A)^alpha (A')^x B^y H.
Rational p_bivariate(const Rational& alpha, const Rational& x, const Rational& y,
                     const FamilySpec& spec, int n);

// n! [t^n] (t/A)^alpha (A')^x; A alone, same constraints as FamilySpec.A.
Rational t_poly(const Rational& alpha, const Rational& x, const Series& A, int n);

// Ordinary coefficient [t^n] (1-t)^alpha exp(x ((1-t)^beta - 1)).
Rational laguerre_like(const Rational& alpha, const Rational& beta, const Rational& x, int n);

// n! [t^n] (t/(e^t - 1))^alpha e^{xt}.
Rational bernoulli_first(const Rational& alpha, const Rational& x, int n);

// n! [t^n] (t/ln(1+t))^alpha (1+t)^x.
Rational bernoulli_second(const Rational& alpha, const Rational& x, int n);

// (1/m^n) C(n+p, p)^{-1} w_{m,r}(n+p, p); equals bernoulli_first at
// alpha = n+p+1, x = 1 - r/m.
Rational bernoulli_first_closed(int n, int p, const Rational& m, int r);

// (1/m^n) C(n+p, p)^{-1} W_{m,r}(n+p, p); equals bernoulli_second at
// alpha = n+p+1, x = -1 + r/m.
Rational bernoulli_second_closed(int n, int p, const Rational& m, int r);

// (1/m^n) sum_k C(k+p, p)^{-1} W_{m,r}(n, k) w_{m,s}(k+p, p); equals
// bernoulli_first at alpha = p, x = (r-s)/m.
Rational bernoulli_first_mixed(int n, int p, const Rational& m, int r, int s);

// (1/m^n) sum_k C(k+p, p)^{-1} w_{m,r}(n, k) W_{m,s}(k+p, p); equals
// bernoulli_second at alpha = p, x = (s-r)/m.
Rational bernoulli_second_mixed(int n, int p, const Rational& m, int r, int s);

}  // namespace rbellkit
