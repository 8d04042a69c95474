#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "seq_family.hpp"

using namespace rbellkit;

namespace {

std::vector<Rational> rats(std::initializer_list<long> nums) {
  std::vector<Rational> v;
  for (long n : nums) v.emplace_back(n);
  return v;
}

}  // namespace

TEST_CASE("entry formulas per kind") {
  CHECK(SequenceFamily::ones().materialize(4) == rats({1, 1, 1, 1}));
  CHECK(SequenceFamily::exponential(2).materialize(4) == rats({1, 2, 4, 8}));
  CHECK(SequenceFamily::exponential(Rational(1, 2)).entry(3) == Rational(1, 4));
  // (-1)^{j-1} (j-1)! m^{j-1}
  CHECK(SequenceFamily::log_inverse(1).materialize(4) == rats({1, -1, 2, -6}));
  CHECK(SequenceFamily::log_inverse(2).entry(3) == Rational(8));
  // (-1)^j (beta)_j
  CHECK(SequenceFamily::power_binomial(2).materialize(3) == rats({-2, 2, 0}));
  // a_1 = 1 then (-1)^{j-1} (alpha)_{j-1}
  CHECK(SequenceFamily::power_binomial_shifted(3).materialize(4) == rats({1, -3, 6, -6}));
  CHECK(SequenceFamily::falling_factorial_seq(3).materialize(4) == rats({3, 6, 6, 0}));
  CHECK(SequenceFamily::rising_factorial_seq(2).materialize(3) == rats({2, 6, 24}));
  CHECK(SequenceFamily::signed_factorial().materialize(4) == rats({1, -1, 2, -6}));
  CHECK(SequenceFamily::explicit_list(rats({5, -7})).materialize(2) == rats({5, -7}));
  CHECK(SequenceFamily::shifted(SequenceFamily::ones(), Rational(9)).materialize(3) ==
        rats({9, 1, 1}));
}

TEST_CASE("series roles") {
  // a-role of exponential(2) is (e^{2t}-1)/2 = t + t^2 + ...
  CHECK(SequenceFamily::exponential(2).to_series(2, Rational(0)) ==
        Series(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
  // constant slot is caller-chosen
  CHECK(SequenceFamily::ones().to_series(1, Rational(4)).coeff(0) == Rational(4));
  // b-role of signed_factorial is 1/(1+t)
  CHECK(SequenceFamily::signed_factorial().b_series(2) ==
        Series(std::vector<Rational>{Rational(1), Rational(-1), Rational(1)}));
  // b-role of ones is e^t
  CHECK(SequenceFamily::ones().b_series(3) ==
        Series(std::vector<Rational>{Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)}));
  // b-role of a shifted family is a0 + inner a-role: (1+t)^2 here
  const auto shifted = SequenceFamily::shifted(SequenceFamily::falling_factorial_seq(2), Rational(1));
  CHECK(shifted.b_series(2) == Series(std::vector<Rational>{Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("from_series round trips") {
  const Series s(std::vector<Rational>{Rational(0), Rational(1), Rational(-1), Rational(2, 3)});
  const auto egf_fam = SequenceFamily::from_series(s, true);
  CHECK(egf_fam.materialize(3) == rats({1, -2, 4}));
  CHECK(egf_fam.to_series(3, Rational(0)) == s);
  const auto ogf_fam = SequenceFamily::from_series(s, false);
  CHECK(ogf_fam.entry(2) == Rational(-1));
  // entries beyond the stored order are a structural error, never zero
  CHECK_THROWS_AS(egf_fam.entry(4), std::invalid_argument);
}

TEST_CASE("bounds and argument errors") {
  CHECK_THROWS_AS(SequenceFamily::exponential(0), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::log_inverse(0), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::ones().entry(0), std::out_of_range);
  CHECK_THROWS_AS(SequenceFamily::explicit_list(rats({1, 2})).entry(3), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::ones().materialize(-1), std::invalid_argument);
}

TEST_CASE("parse and describe round trip") {
  for (const char* text : {"ones", "exponential:m=2", "exponential:m=-1/2", "log-inverse:m=1",
                           "power-binomial:beta=1/2", "power-binomial-shifted:alpha=-3",
                           "falling-factorial:beta=3", "rising-factorial:beta=2",
                           "signed-factorial", "explicit:[1,-2,3/4]", "shifted:ones",
                           "shifted:explicit:[2,5]"}) {
    CAPTURE(text);
    CHECK(SequenceFamily::parse(text).describe() == text);
  }
  // alias
  CHECK(SequenceFamily::parse("exp").describe() == "ones");
  // parsed families evaluate like their factories
  CHECK(SequenceFamily::parse("exponential:m=3").entry(3) == Rational(9));
  CHECK(SequenceFamily::parse("shifted:ones").entry(1) == Rational(1));
  CHECK(SequenceFamily::parse("explicit:[1,-2]").materialize(2) == rats({1, -2}));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(SequenceFamily::parse("nope"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::parse("exponential"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::parse("exponential:k=2"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::parse("ones:m=1"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::parse("explicit:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::parse("explicit:[1,2/0]"), std::invalid_argument);
  CHECK_THROWS_AS(SequenceFamily::parse("exponential:m=1.5"), std::invalid_argument);
}
