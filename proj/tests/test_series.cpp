#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "series.hpp"

using namespace rbellkit;

namespace {

Series q(std::initializer_list<long> nums) {
  std::vector<Rational> c;
  for (long v : nums) c.emplace_back(v);
  return Series(std::move(c));
}

Series qr(std::vector<Rational> coeffs) { return Series(std::move(coeffs)); }

Series random_series(std::mt19937_64& rng, int order, bool unit_constant) {
  std::vector<Rational> c;
  c.push_back(unit_constant ? Rational(1) : oracles::random_rational(rng, false));
  for (int j = 1; j <= order; ++j) c.push_back(oracles::random_rational(rng, false));
  return Series(std::move(c));
}

oracles::Poly to_poly(const Series& f) {
  return oracles::Poly(f.coeffs().begin(), f.coeffs().end());
}

}  // namespace

TEST_CASE("construction and accessors") {
  const Series f = q({1, 2, 3});
  CHECK(f.order() == 2);
  CHECK(f.coeff(0) == 1);
  CHECK(f.coeff(2) == 3);
  CHECK_THROWS_AS(f.coeff(3), std::out_of_range);
  CHECK_THROWS_AS(f.coeff(-1), std::out_of_range);
  CHECK_THROWS_AS(Series(std::vector<Rational>{}), std::invalid_argument);
  CHECK_THROWS_AS(make_series({Rational(1)}, 1), std::invalid_argument);
  CHECK(Series::zero(2) == q({0, 0, 0}));
  CHECK(Series::one(1) == q({1, 0}));
  CHECK(Series::identity(3) == q({0, 1, 0, 0}));
  CHECK_THROWS_AS(Series::identity(0), std::invalid_argument);
  CHECK(Series::constant(Rational(7), 0) == q({7}));
}

TEST_CASE("ring operations match hand values") {
  const Series f = q({1, 2, 0});
  CHECK(add(f, f) == q({2, 4, 0}));
  CHECK(sub(f, q({0, 1, 1})) == q({1, 1, -1}));
  CHECK(negate(f) == q({-1, -2, 0}));
  CHECK(scale(Rational(1, 2), f) == qr({Rational(1, 2), Rational(1), Rational(0)}));
  CHECK(add_constant(f, Rational(-1)) == q({0, 2, 0}));
  CHECK(mul(q({1, 1, 0}), q({1, -1, 0})) == q({1, 0, -1}));
  CHECK_THROWS_AS(mul(q({1, 1}), q({1, 1, 1})), std::invalid_argument);
  CHECK(truncated(q({1, 2, 3}), 1) == q({1, 2}));
  CHECK_THROWS_AS(truncated(q({1, 2}), 2), std::invalid_argument);
  CHECK(extended(q({1, 2}), 3) == q({1, 2, 0, 0}));
  CHECK_THROWS_AS(extended(q({1, 2, 3}), 1), std::invalid_argument);
}

TEST_CASE("frozen values: reciprocal, powers, exp, log") {
  // 1/(1+2t) = 1 - 2t + 4t^2 - ...
  CHECK(reciprocal(q({1, 2, 0})) == q({1, -2, 4}));
  // (1+2t)^(1/2) = 1 + t - t^2/2 + ...
  CHECK(pow_rational(q({1, 2, 0}), Rational(1, 2)) ==
        qr({Rational(1), Rational(1), Rational(-1, 2)}));
  // exp(2t) = 1 + 2t + 2t^2 + ...
  CHECK(exp_series(q({0, 2, 0})) == q({1, 2, 2}));
  // log(1/(1-t)) = t + t^2/2 + t^3/3
  const Series geom = reciprocal(q({1, -1, 0, 0}));
  CHECK(log_series(geom) == qr({Rational(0), Rational(1), Rational(1, 2), Rational(1, 3)}));
  // integer powers, including negative
  CHECK(pow_rational(q({1, 1, 0}), Rational(2)) == q({1, 2, 1}));
  CHECK(pow_rational(q({1, 1, 0}), Rational(-1)) == q({1, -1, 1}));
  CHECK(pow_rational(q({0, 1, 0}), Rational(0)) == q({1, 0, 0}));
  // EGF readout: 1/(1-t) has egf coefficient n!
  CHECK(egf_coeff(reciprocal(q({1, -1, 0, 0, 0})), 4) == Rational(24));
  CHECK(egf_coeff(q({5, 0}), 0) == Rational(5));
}

TEST_CASE("frozen values: composition and inversion") {
  const Series g = q({0, 1, -1, 0});            // t - t^2
  const Series f = reciprocal(q({1, -1, 0, 0}));  // 1/(1-t)
  CHECK(compose(f, g) == q({1, 1, 0, -1}));
  // Catalan numbers: inverse of t - t^2
  CHECK(comp_inverse(q({0, 1, -1, 0, 0, 0})) == q({0, 1, 1, 2, 5, 14}));
  // inverse of (e^{2t}-1)/2 = t + t^2 + (2/3)t^3 + (1/3)t^4
  const Series a =
      qr({Rational(0), Rational(1), Rational(1), Rational(2, 3), Rational(1, 3)});
  CHECK(comp_inverse(a) ==
        qr({Rational(0), Rational(1), Rational(-1), Rational(4, 3), Rational(-2)}));
  CHECK(derivative(q({3, 1, 2})) == q({1, 4}));
  CHECK_THROWS_AS(derivative(q({3})), std::invalid_argument);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(reciprocal(q({0, 1})), std::domain_error);
  CHECK_THROWS_AS(exp_series(q({1, 1})), std::domain_error);
  CHECK_THROWS_AS(log_series(q({2, 1})), std::domain_error);
  CHECK_THROWS_AS(pow_rational(q({0, 1}), Rational(-2)), std::domain_error);
  CHECK_THROWS_AS(pow_rational(q({2, 1}), Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(compose(q({1, 1}), q({1, 1})), std::domain_error);
  CHECK_THROWS_AS(comp_inverse(q({0, 0, 1})), std::domain_error);
  CHECK_THROWS_AS(comp_inverse(q({1, 1})), std::domain_error);
  CHECK_THROWS_AS(egf_coeff(q({1, 1}), 2), std::out_of_range);
}

TEST_CASE("seeded property suite at order 24") {
  // Criterion-level coverage: >= 100 random series through the round trips.
  const int N = 24;
  std::mt19937_64 rng(20240811);
  int series_used = 0;
  for (int iter = 0; iter < 35; ++iter) {
    const Series f = random_series(rng, N, false);
    const Series g = random_series(rng, N, false);
    const Series u = random_series(rng, N, true);  // constant term 1
    series_used += 3;

    // ring laws against the naive oracle
    CHECK(to_poly(mul(f, g)) == oracles::trunc(oracles::conv(to_poly(f), to_poly(g)), N));
    CHECK(mul(f, g) == mul(g, f));
    CHECK(mul(add(f, g), u) == add(mul(f, u), mul(g, u)));

    // derivative is a derivation
    CHECK(derivative(mul(f, g)) ==
          add(mul(derivative(f), truncated(g, N - 1)), mul(truncated(f, N - 1), derivative(g))));

    // exp/log round trip on c_0 = 0 input
    Series z = f;
    z = sub(z, Series::constant(z.coeff(0), N));
    CHECK(log_series(exp_series(z)) == z);

    // reciprocal against oracle multiplication
    if (f.coeff(0) != 0) CHECK(mul(f, reciprocal(f)) == Series::one(N));

    // pow_rational additivity on c_0 = 1 series
    CHECK(mul(pow_rational(u, Rational(1, 2)), pow_rational(u, Rational(3, 2))) ==
          pow_rational(u, Rational(2)));
    CHECK(pow_rational(u, Rational(-5, 3)) == reciprocal(pow_rational(u, Rational(5, 3))));

    // composition against the substitution oracle
    Series inner = g;
    inner = sub(inner, Series::constant(inner.coeff(0), N));
    CHECK(to_poly(compose(f, inner)) ==
          oracles::substitute(to_poly(f), to_poly(inner), static_cast<std::size_t>(N)));

    // compositional inverse round trip + oracle
    if (inner.coeff(1) != 0) {
      const Series inv = comp_inverse(inner);
      CHECK(compose(inner, inv) == Series::identity(N));
      CHECK(compose(inv, inner) == Series::identity(N));
      CHECK(to_poly(inv) ==
            oracles::invert_triangular(to_poly(inner), static_cast<std::size_t>(N)));
    }
  }
  CHECK(series_used >= 100);
}
