#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rbell.hpp"

using namespace rbellkit;

TEST_CASE("classical partial Bell values") {
  const auto ones = SequenceFamily::ones();
  // B_{3,2}(1,1,...) = 3 (Stirling2)
  CHECK(partial_r_bell(ones, ones, 3, 2, 0) == Rational(3));
  // first rows of the r = 0 triangle
  const RBellTable t(ones, ones, 0, 2);
  CHECK(t.value(0, 0) == 1);
  CHECK(t.value(1, 0) == 0);
  CHECK(t.value(1, 1) == 1);
  CHECK(t.value(2, 1) == 1);
  CHECK(t.value(2, 2) == 1);
  // r = 1 row n = 1: both k slots are 1
  const RBellTable t1(ones, ones, 1, 1);
  CHECK(t1.value(1, 0) == 1);
  CHECK(t1.value(1, 1) == 1);
}

TEST_CASE("r = 0 matches the multinomial-sum oracle") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 4; ++rep) {
    const auto seq = oracles::random_sequence(rng, 8);
    std::vector<Rational> entries(seq.begin(), seq.end());
    const auto a = SequenceFamily::explicit_list(entries);
    const auto b = SequenceFamily::ones();
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) {
        CAPTURE(rep);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(partial_r_bell(a, b, n, k, 0) ==
              oracles::bell_multinomial(seq, static_cast<unsigned>(n), static_cast<unsigned>(k)));
      }
  }
}

TEST_CASE("diagonal and edge structure") {
  const auto a = SequenceFamily::explicit_list({Rational(3), Rational(1), Rational(4)});
  const auto b = SequenceFamily::explicit_list({Rational(2), Rational(7), Rational(1), Rational(5)});
  for (int r = 0; r <= 2; ++r) {
    const RBellTable t(a, b, r, 3);
    for (int n = 0; n <= 3; ++n) {
      // B[n,n] = a_1^n b_1^r
      Rational expect = 1;
      for (int i = 0; i < n; ++i) expect *= Rational(3);
      for (int i = 0; i < r; ++i) expect *= Rational(2);
      CHECK(t.value(n, n) == expect);
    }
  }
}

TEST_CASE("Whitney values by EGF path and recurrence oracle") {
  CHECK(whitney_second(2, 1, 2, 1) == Rational(4));
  CHECK(whitney_first(2, 1, 2, 1) == Rational(-4));
  CHECK(whitney_second(1, 0, 3, 2) == Rational(3));
  CHECK(whitney_first(1, 0, 3, 2) == Rational(-3));
  for (long m = 1; m <= 3; ++m)
    for (int r = 0; r <= 2; ++r) {
      const auto W = oracles::whitney2_triangle(oracles::Q(m), r, 7);
      const auto w = oracles::whitney1_triangle(oracles::Q(m), r, 7);
      for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
          CAPTURE(m);
          CAPTURE(r);
          CAPTURE(n);
          CAPTURE(k);
          CHECK(whitney_second(Rational(m), r, n, k) ==
                W[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
          CHECK(whitney_first(Rational(m), r, n, k) ==
                w[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("inverse pair closed forms") {
  // inverse of (e^t - 1, e^t) is (ln(1+t), 1/(1+t))
  const auto pr = inverse_pair(SequenceFamily::ones(), SequenceFamily::ones(), 4);
  CHECK(pr.first.materialize(4) == SequenceFamily::log_inverse(1).materialize(4));
  CHECK(pr.second.b_series(3) == SequenceFamily::signed_factorial().b_series(3));
  // inverse a-role of t - t^2 carries Catalan EGF entries
  std::vector<Rational> expl(6, Rational(0));
  expl[0] = 1;
  expl[1] = -2;
  const auto cat = inverse_pair(SequenceFamily::explicit_list(expl), SequenceFamily::ones(), 4);
  CHECK(cat.first.materialize(4) ==
        std::vector<Rational>{Rational(1), Rational(2), Rational(12), Rational(120)});
  // involution: the inverse of the inverse is the original
  const auto back = inverse_pair(pr.first, pr.second, 4);
  CHECK(back.first.materialize(4) == SequenceFamily::ones().materialize(4));
  CHECK(back.second.b_series(3) == SequenceFamily::ones().b_series(3));
}

TEST_CASE("orthogonality spots") {
  const auto e2 = SequenceFamily::exponential(2);
  const auto ones = SequenceFamily::ones();
  CHECK(orthogonality_defect(e2, ones, 1, 2, 0) == 0);
  CHECK(orthogonality_defect(e2, ones, 1, 2, 1) == 0);
  CHECK(orthogonality_defect(e2, ones, 1, 2, 2) == 0);
  CHECK(orthogonality_defect(ones, ones, 3, 5, 2) == 0);
}

TEST_CASE("table export") {
  const RBellTable t(SequenceFamily::ones(), SequenceFamily::ones(), 0, 2);
  CHECK(t.to_csv() == "n,k,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n");
  const std::string json = t.to_json();
  CHECK(json.find("\"a\"") != std::string::npos);
  CHECK(json.find("\"rows\"") != std::string::npos);
  CHECK(json.find("\"max_n\"") != std::string::npos);
}

TEST_CASE("argument and domain errors") {
  const auto ones = SequenceFamily::ones();
  CHECK_THROWS_AS(partial_r_bell(ones, ones, 2, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(partial_r_bell(ones, ones, -1, 0, 0), std::out_of_range);
  CHECK_THROWS_AS(partial_r_bell(ones, ones, 2, 1, -1), std::invalid_argument);
  const RBellTable t(ones, ones, 0, 2);
  CHECK_THROWS_AS(t.value(3, 0), std::out_of_range);
  CHECK_THROWS_AS(t.value(2, 3), std::out_of_range);
  const auto zero_lead = SequenceFamily::explicit_list({Rational(0), Rational(1)});
  CHECK_THROWS_AS(inverse_pair(zero_lead, ones, 2), std::domain_error);
  CHECK_THROWS_AS(inverse_pair(ones, zero_lead, 2), std::domain_error);
  CHECK_THROWS_AS(inverse_pair(ones, ones, 0), std::invalid_argument);
}
