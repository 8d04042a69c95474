#include "series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rbellkit {

namespace {

void require_equal_orders(const Series& f, const Series& g, const char* op) {
  if (f.order() != g.order())
    throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                std::to_string(f.order()) + " vs " +
                                std::to_string(g.order()) + ")");
}

}  // namespace

Series::Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

Series Series::zero(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  return Series(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

Series Series::one(int order) { return constant(Rational(1), order); }

Series Series::constant(const Rational& c, int order) {
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::identity(int order) {
  if (order < 1) throw std::invalid_argument("identity series needs order >= 1");
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  v[1] = 1;
  return Series(std::move(v));
}

const Rational& Series::coeff(int j) const {
  if (j < 0 || j > order()) throw std::out_of_range("coefficient index " + std::to_string(j));
  return c_[static_cast<std::size_t>(j)];
}

std::string Series::to_string() const {
  std::string out;
  for (int j = 0; j <= order(); ++j) {
    const Rational& c = c_[static_cast<std::size_t>(j)];
    if (c == 0 && order() > 0) continue;
    std::string term = rbellkit::to_string(c < 0 ? Rational(-c) : c);
    if (j > 0) {
      if (term == "1") term.clear();
      term += "t";
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  return out;
}

Series make_series(std::vector<Rational> coeffs, int order) {
  if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("make_series: need exactly order + 1 coefficients");
  return Series(std::move(coeffs));
}

Series add(const Series& f, const Series& g) {
  require_equal_orders(f, g, "add");
  std::vector<Rational> v(f.coeffs());
  for (int j = 0; j <= g.order(); ++j) v[static_cast<std::size_t>(j)] += g.coeff(j);
  return Series(std::move(v));
}

Series sub(const Series& f, const Series& g) {
  require_equal_orders(f, g, "sub");
  std::vector<Rational> v(f.coeffs());
  for (int j = 0; j <= g.order(); ++j) v[static_cast<std::size_t>(j)] -= g.coeff(j);
  return Series(std::move(v));
}

Series negate(const Series& f) { return scale(Rational(-1), f); }

Series scale(const Rational& c, const Series& f) {
  std::vector<Rational> v(f.coeffs());
  for (auto& x : v) x *= c;
  return Series(std::move(v));
}

Series add_constant(const Series& f, const Rational& c) {
  std::vector<Rational> v(f.coeffs());
  v[0] += c;
  return Series(std::move(v));
}

Series mul(const Series& f, const Series& g) {
  require_equal_orders(f, g, "mul");
  const int n = f.order();
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  Rational term;
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (g.coeff(j) == 0) continue;
      term = f.coeff(i) * g.coeff(j);
      v[static_cast<std::size_t>(i + j)] += term;
    }
  }
  return Series(std::move(v));
}

Series truncated(const Series& f, int order) {
  if (order < 0 || order > f.order())
    throw std::invalid_argument("truncated: order " + std::to_string(order) +
                                " outside [0, " + std::to_string(f.order()) + "]");
  std::vector<Rational> v(f.coeffs().begin(), f.coeffs().begin() + order + 1);
  return Series(std::move(v));
}

Series extended(const Series& f, int order) {
  if (order < f.order())
    throw std::invalid_argument("extended: order below current order");
  std::vector<Rational> v(f.coeffs());
  v.resize(static_cast<std::size_t>(order) + 1);
  return Series(std::move(v));
}

Series reciprocal(const Series& f) {
  if (f.coeff(0) == 0) throw std::domain_error("reciprocal: constant term is zero");
  const int n = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = Rational(1) / f.coeff(0);
  g[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Rational s(0);
    for (int j = 1; j <= m; ++j) {
      if (f.coeff(j) == 0) continue;
      s += f.coeff(j) * g[static_cast<std::size_t>(m - j)];
    }
    g[static_cast<std::size_t>(m)] = -inv0 * s;
  }
  return Series(std::move(g));
}

Series exp_series(const Series& f) {
  if (f.coeff(0) != 0) throw std::domain_error("exp_series: constant term must be zero");
  const int n = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  g[0] = 1;
  // (m+1) g_{m+1} = sum_{j=0..m} (j+1) f_{j+1} g_{m-j}
  for (int m = 0; m < n; ++m) {
    Rational s(0);
    for (int j = 0; j <= m && j + 1 <= n; ++j) {
      if (f.coeff(j + 1) == 0) continue;
      s += Rational(j + 1) * f.coeff(j + 1) * g[static_cast<std::size_t>(m - j)];
    }
    g[static_cast<std::size_t>(m + 1)] = s / Rational(m + 1);
  }
  return Series(std::move(g));
}

Series log_series(const Series& f) {
  if (f.coeff(0) != 1) throw std::domain_error("log_series: constant term must be one");
  const int n = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  // From f' = g' f: (m+1) f_{m+1} = sum_{j=0..m} (j+1) g_{j+1} f_{m-j}, f_0 = 1.
  for (int m = 0; m < n; ++m) {
    Rational s = Rational(m + 1) * f.coeff(m + 1);
    for (int j = 0; j < m; ++j) {
      if (f.coeff(m - j) == 0) continue;
      s -= Rational(j + 1) * g[static_cast<std::size_t>(j + 1)] * f.coeff(m - j);
    }
    g[static_cast<std::size_t>(m + 1)] = s / Rational(m + 1);
  }
  return Series(std::move(g));
}

namespace {

Series pow_nonneg(const Series& f, unsigned long e) {
  Series acc = Series::one(f.order());
  Series sq = f;
  while (e != 0) {
    if (e & 1UL) acc = mul(acc, sq);
    e >>= 1UL;
    if (e != 0) sq = mul(sq, sq);
  }
  return acc;
}

}  // namespace

Series pow_rational(const Series& f, const Rational& q) {
  if (is_integer(q)) {
    long e = to_long(q);
    if (e >= 0) return pow_nonneg(f, static_cast<unsigned long>(e));
    return pow_nonneg(reciprocal(f), static_cast<unsigned long>(-e));
  }
  if (f.coeff(0) != 1)
    throw std::domain_error("pow_rational: non-integer exponent needs constant term one");
  return exp_series(scale(q, log_series(f)));
}

Series compose(const Series& f, const Series& g) {
  require_equal_orders(f, g, "compose");
  if (g.coeff(0) != 0) throw std::domain_error("compose: inner constant term must be zero");
  const int n = f.order();
  // Horner over the truncated ring.
  Series acc = Series::constant(f.coeff(n), n);
  for (int j = n - 1; j >= 0; --j) acc = add_constant(mul(acc, g), f.coeff(j));
  return acc;
}

Series comp_inverse(const Series& f) {
  if (f.order() < 1) throw std::invalid_argument("comp_inverse: needs order >= 1");
  if (f.coeff(0) != 0) throw std::domain_error("comp_inverse: constant term must be zero");
  if (f.coeff(1) == 0) throw std::domain_error("comp_inverse: linear term must be nonzero");
  const int n = f.order();
  // g correct through order m; each Newton step lifts m to min(2m, n).
  std::vector<Rational> g0{Rational(0), Rational(1) / f.coeff(1)};
  Series g(std::move(g0));
  int m = 1;
  while (m < n) {
    const int m2 = std::min(2 * m, n);
    g = extended(g, m2);
    const Series fm = truncated(f, m2);
    // f' padded to order m2; the padding slot only influences orders that the
    // O(t^{m+1}) numerator pushes past m2.
    std::vector<Rational> dp(static_cast<std::size_t>(m2) + 1);
    for (int j = 0; j <= m2 && j + 1 <= n; ++j) dp[static_cast<std::size_t>(j)] = Rational(j + 1) * f.coeff(j + 1);
    const Series err = sub(compose(fm, g), Series::identity(m2));
    const Series den = compose(Series(std::move(dp)), g);
    g = sub(g, mul(err, reciprocal(den)));
    m = m2;
  }
  return g;
}

Series derivative(const Series& f) {
  if (f.order() < 1) throw std::invalid_argument("derivative: needs order >= 1");
  std::vector<Rational> v(static_cast<std::size_t>(f.order()));
  for (int j = 1; j <= f.order(); ++j) v[static_cast<std::size_t>(j - 1)] = Rational(j) * f.coeff(j);
  return Series(std::move(v));
}

Rational egf_coeff(const Series& f, int n) {
  if (n < 0 || n > f.order()) throw std::out_of_range("egf_coeff: index " + std::to_string(n));
  return Rational(factorial(static_cast<unsigned long>(n))) * f.coeff(n);
}

}  // namespace rbellkit
