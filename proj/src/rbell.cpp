#include "rbell.hpp"

#include <stdexcept>

#include "json.hpp"

namespace rbellkit {

namespace {

void check_triangle_args(int n, int k, int r) {
  if (n < 0) throw std::out_of_range("partial_r_bell: n must be nonnegative");
  if (k < 0 || k > n) throw std::out_of_range("partial_r_bell: k outside [0, n]");
  if (r < 0) throw std::invalid_argument("partial_r_bell: r must be nonnegative");
}

}  // namespace

Rational partial_r_bell(const SequenceFamily& a, const SequenceFamily& b, int n, int k, int r) {
  check_triangle_args(n, k, r);
  const Series A = a.to_series(n, Rational(0));
  const Series B = b.b_series(n);
  const Series prod = mul(pow_rational(A, Rational(k)), pow_rational(B, Rational(r)));
  return egf_coeff(prod, n) / Rational(factorial(static_cast<unsigned long>(k)));
}

RBellTable::RBellTable(const SequenceFamily& a, const SequenceFamily& b, int r, int max_n)
    : a_label_(a.describe()), b_label_(b.describe()), r_(r) {
  if (max_n < 0) throw std::out_of_range("table needs max_n >= 0");
  if (r < 0) throw std::invalid_argument("table needs r >= 0");
  const Series A = a.to_series(max_n, Rational(0));
  const Series Br = pow_rational(b.b_series(max_n), Rational(r));
  v_.resize(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) v_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
  Series apow = Series::one(max_n);  // A^k, built incrementally
  Rational kfac(1);
  for (int k = 0; k <= max_n; ++k) {
    if (k > 0) {
      apow = mul(apow, A);
      kfac *= k;
    }
    const Series prod = mul(apow, Br);
    for (int n = k; n <= max_n; ++n)
      v_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = egf_coeff(prod, n) / kfac;
  }
}

const Rational& RBellTable::value(int n, int k) const {
  if (n < 0 || n > max_n() || k < 0 || k > n)
    throw std::out_of_range("table index (" + std::to_string(n) + ", " + std::to_string(k) + ")");
  return v_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::string RBellTable::to_csv() const {
  std::string out = "n,k,value\n";
  for (int n = 0; n <= max_n(); ++n)
    for (int k = 0; k <= n; ++k)
      out += std::to_string(n) + "," + std::to_string(k) + "," + to_string(value(n, k)) + "\n";
  return out;
}

std::string RBellTable::to_json() const {
  nlohmann::ordered_json j;
  j["a"] = a_label_;
  j["b"] = b_label_;
  j["r"] = r_;
  j["max_n"] = max_n();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n = 0; n <= max_n(); ++n) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k <= n; ++k) row.push_back(to_string(value(n, k)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::pair<SequenceFamily, SequenceFamily> inverse_pair(const SequenceFamily& a,
                                                       const SequenceFamily& b, int order) {
  if (order < 1) throw std::invalid_argument("inverse_pair: order must be >= 1");
  if (a.entry(1) == 0) throw std::domain_error("inverse_pair: a_1 must be nonzero");
  if (b.entry(1) == 0) throw std::domain_error("inverse_pair: b_1 must be nonzero");
  const Series A = a.to_series(order, Rational(0));
  const Series B = b.b_series(order);
  const Series Abar = comp_inverse(A);
  const Series Bbar = reciprocal(compose(B, Abar));
  SequenceFamily abar = SequenceFamily::from_series(Abar, true);
  SequenceFamily bbar =
      SequenceFamily::shifted(SequenceFamily::from_series(Bbar, true), Bbar.coeff(0));
  return {std::move(abar), std::move(bbar)};
}

Rational whitney_second(const Rational& m, int r, int n, int k) {
  return partial_r_bell(SequenceFamily::exponential(m), SequenceFamily::ones(), n, k, r);
}

Rational whitney_first(const Rational& m, int r, int n, int k) {
  check_triangle_args(n, k, r);
  const int order = n > 0 ? n : 1;
  auto [abar, bbar] =
      inverse_pair(SequenceFamily::exponential(m), SequenceFamily::ones(), order);
  return partial_r_bell(abar, bbar, n, k, r);
}

Rational orthogonality_defect(const SequenceFamily& a, const SequenceFamily& b, int r, int n,
                              int j) {
  if (n < 0 || j < 0 || j > n) throw std::out_of_range("orthogonality_defect: need 0 <= j <= n");
  const int order = n > 0 ? n : 1;
  auto [abar, bbar] = inverse_pair(a, b, order);
  const RBellTable F(a, b, r, n);
  const RBellTable G(abar, bbar, r, n);
  Rational sum(0);
  for (int k = j; k <= n; ++k) sum += F.value(n, k) * G.value(k, j);
  if (n == j) sum -= 1;
  return sum;
}

}  // namespace rbellkit
