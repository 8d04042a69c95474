#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seq_family.hpp"

namespace rbellkit {

// B^{(r)}_{n+r, k+r}(a; b) = n! [t^n] (1/k!) A(t)^k B(t)^r with
// A = a.to_series(n, 0) and B = b.b_series(n). Requires 0 <= k <= n, r >= 0.
// The truncation order used is exactly n.
Rational partial_r_bell(const SequenceFamily& a, const SequenceFamily& b, int n, int k, int r);

// Triangle v[n][k] for 0 <= k <= n <= max_n, shared-prefix evaluation of
// partial_r_bell over one series build.
class RBellTable {
 public:
  RBellTable(const SequenceFamily& a, const SequenceFamily& b, int r, int max_n);

  int max_n() const { return static_cast<int>(v_.size()) - 1; }
  int r() const { return r_; }
  const Rational& value(int n, int k) const;  // index error outside the triangle
  const std::string& a_label() const { return a_label_; }
  const std::string& b_label() const { return b_label_; }

  // Rows "n,k,value" with exact rational values.
  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::vector<Rational>> v_;
  std::string a_label_, b_label_;
  int r_;
};

// Theorem-level inverse pair: for A = a-role series of `a` (a_1 != 0) and
// B = b-role series of `b` (b_1 != 0), returns the pair (abar, bbar) with
// abar backed by the compositional inverse Abar of A and bbar's b-role
// series equal to 1 / B(Abar(t)). `order` bounds later materializations.
std::pair<SequenceFamily, SequenceFamily> inverse_pair(const SequenceFamily& a,
                                                       const SequenceFamily& b, int order);

// r-Whitney numbers W_{m,r}(n, k): partial_r_bell(exponential(m), ones, n, k, r).
Rational whitney_second(const Rational& m, int r, int n, int k);

// r-Whitney numbers of the first kind w_{m,r}(n, k): partial_r_bell over
// inverse_pair(exponential(m), ones).
Rational whitney_first(const Rational& m, int r, int n, int k);

// sum_k B^{(r)}(a;b)[n,k] B^{(r)}(abar;bbar)[k,j] - [n == j].
Rational orthogonality_defect(const SequenceFamily& a, const SequenceFamily& b, int r, int n,
                              int j);

}  // namespace rbellkit
