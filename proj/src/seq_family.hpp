#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "series.hpp"

namespace rbellkit {

// A family denotes an infinite exact-rational sequence a_1, a_2, ... that can
// be materialized to any finite prefix (explicit lists and series-backed
// families are bounded by their stored length and raise a structural error
// beyond it). A family can be read in two series roles:
//
//   to_series(N, c):  c + sum_{j=1..N} a_j t^j / j!        (a-role)
//   b_series(N):      sum_{j=0..N} a_{j+1} t^j / j!        (b-role)
//
// so ones() is e^t - 1 in the a-role and e^t in the b-role.
class SequenceFamily {
 public:
  static SequenceFamily ones();
  // a_j = m^{j-1}; a-role EGF (e^{mt} - 1) / m. m != 0.
  static SequenceFamily exponential(const Rational& m);
  // a_j = (-1)^{j-1} (j-1)! m^{j-1}; a-role EGF ln(1 + mt) / m. m != 0.
  static SequenceFamily log_inverse(const Rational& m);
  // a_j = (-1)^j (beta)_j; a-role EGF (1-t)^beta - 1.
  static SequenceFamily power_binomial(const Rational& beta);
  // a_1 = 1, a_j = (-1)^{j-1} (alpha)_{j-1}; b-role EGF (1-t)^alpha.
  static SequenceFamily power_binomial_shifted(const Rational& alpha);
  // a_j = (beta)_j = beta (beta-1) ... (beta-j+1).
  static SequenceFamily falling_factorial_seq(const Rational& beta);
  // a_j = <beta>_j = beta (beta+1) ... (beta+j-1).
  static SequenceFamily rising_factorial_seq(const Rational& beta);
  // a_j = (-1)^{j-1} (j-1)!; b-role EGF 1 / (1+t).
  static SequenceFamily signed_factorial();
  // Finite prefix; materializing past the end is a structural error,
  // entries are never zero-padded.
  static SequenceFamily explicit_list(std::vector<Rational> entries);
  // a_j = j! c_j when egf is set, a_j = c_j otherwise (j <= s.order()).
  static SequenceFamily from_series(Series s, bool egf);
  // Prepends a0: the shifted family is (a0, a_1, a_2, ...), so its b-role
  // series is a0 + (inner a-role series).
  static SequenceFamily shifted(SequenceFamily inner, Rational a0);

  // Grammar: kind[:param=value] with rationals as "num/den"; explicit lists
  // as explicit:[1,2,-3/4]; a shifted: prefix wraps any parseable family.
  // "exp" is an alias for ones.
  static SequenceFamily parse(const std::string& text);

  // Round-trips through parse() for parseable kinds; descriptive otherwise.
  std::string describe() const;

  Rational entry(int j) const;                 // a_j, j >= 1
  std::vector<Rational> materialize(int n) const;  // a_1..a_n
  Series to_series(int order, const Rational& constant) const;
  Series b_series(int order) const;

 private:
  enum class Kind {
    Ones,
    Exponential,
    LogInverse,
    PowerBinomial,
    PowerBinomialShifted,
    FallingFactorial,
    RisingFactorial,
    SignedFactorial,
    Explicit,
    FromSeries,
    Shifted,
  };

  SequenceFamily(Kind kind, Rational param) : kind_(kind), param_(std::move(param)) {}

  Kind kind_;
  Rational param_;
  std::vector<Rational> list_;
  std::optional<Series> series_;
  bool egf_ = true;
  std::shared_ptr<const SequenceFamily> inner_;
};

}  // namespace rbellkit
