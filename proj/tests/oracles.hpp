#pragma once

// Reference implementations used to cross-check the library. Everything here
// is deliberately naive and depends only on gmpxx, not on the library types,
// so a bug in the production code cannot hide in its own oracle.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracles {

using Q = mpq_class;
using Poly = std::vector<Q>;  // c_0..c_N, plain dense polynomial

inline Q qfac(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Q(f);
}

// Full (untruncated) product.
inline Poly conv(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Poly trunc(Poly p, std::size_t order) {
  p.resize(order + 1, Q(0));
  return p;
}

// f(g(t)) truncated at `order`, by repeated naive products.
inline Poly substitute(const Poly& f, const Poly& g, std::size_t order) {
  Poly acc(1, Q(0));
  acc = trunc(acc, order);
  Poly gpow(1, Q(1));  // g^0
  gpow = trunc(gpow, order);
  for (std::size_t j = 0; j < f.size(); ++j) {
    for (std::size_t i = 0; i <= order; ++i) acc[i] += f[j] * gpow[i];
    gpow = trunc(conv(gpow, g), order);
  }
  return acc;
}

// Coefficient-by-coefficient solve of f(g(t)) = t. Needs f_0 = 0, f_1 != 0.
inline Poly invert_triangular(const Poly& f, std::size_t order) {
  if (f.size() < 2 || f[0] != 0 || f[1] == 0)
    throw std::invalid_argument("invert_triangular: bad input");
  Poly g(order + 1, Q(0));
  g[1] = Q(1) / f[1];
  for (std::size_t m = 2; m <= order; ++m) {
    // Coefficient of t^m in f(g) with the current prefix and g_m unknown:
    // f_1 * g_m + (terms from g_1..g_{m-1}) = 0.
    Poly prefix(g.begin(), g.begin() + m);
    Poly val = substitute(f, prefix, m);
    g[m] = -val[m] / f[1];
  }
  return g;
}

// Partial Bell polynomial B_{n,k}(a_1, a_2, ...) as the sum over
// multisets: n! * prod (a_i / i!)^{j_i} / j_i! with sum j_i = k,
// sum i j_i = n. `a` is 1-based conceptually: a[0] = a_1.
inline Q bell_multinomial(const std::vector<Q>& a, unsigned n, unsigned k) {
  if (k > n) return Q(0);
  if (n == 0) return Q(1);  // k == 0 here
  if (k == 0) return Q(0);
  Q total(0);
  // Recurse over how many parts of each size we take, largest size first.
  struct Rec {
    const std::vector<Q>& a;
    Q total;
    void go(unsigned size, unsigned parts_left, unsigned weight_left, Q acc) {
      if (parts_left == 0) {
        if (weight_left == 0) total += acc;
        return;
      }
      if (size == 0 || weight_left < parts_left) return;
      for (unsigned j = 0; j * size <= weight_left; ++j) {
        Q factor = acc;
        if (j > 0) {
          if (size > a.size()) throw std::invalid_argument("bell_multinomial: sequence too short");
          Q base = a[size - 1] / qfac(size);
          Q p(1);
          for (unsigned i = 0; i < j; ++i) p *= base;
          factor *= p / qfac(j);
        }
        if (j <= parts_left) go(size - 1, parts_left - j, weight_left - j * size, factor);
      }
    }
  } rec{a, Q(0)};
  rec.go(n, k, n, Q(1));
  return rec.total * qfac(n);
}

// r-Whitney numbers of the second kind, triangular recurrence
// W(n, k) = W(n-1, k-1) + (k m + r) W(n-1, k).
inline std::vector<std::vector<Q>> whitney2_triangle(const Q& m, long r, unsigned max_n) {
  std::vector<std::vector<Q>> W(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) W[n].assign(n + 1, Q(0));
  W[0][0] = 1;
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      Q v(0);
      if (k > 0) v += W[n - 1][k - 1];
      if (k <= n - 1) v += (Q(static_cast<long>(k)) * m + Q(r)) * W[n - 1][k];
      W[n][k] = v;
    }
  return W;
}

// r-Whitney numbers of the first kind, triangular recurrence
// w(n, k) = w(n-1, k-1) - ((n-1) m + r) w(n-1, k).
inline std::vector<std::vector<Q>> whitney1_triangle(const Q& m, long r, unsigned max_n) {
  std::vector<std::vector<Q>> w(max_n + 1);
  for (unsigned n = 0; n <= max_n; ++n) w[n].assign(n + 1, Q(0));
  w[0][0] = 1;
  for (unsigned n = 1; n <= max_n; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      Q v(0);
      if (k > 0) v += w[n - 1][k - 1];
      if (k <= n - 1) v -= (Q(static_cast<long>(n - 1)) * m + Q(r)) * w[n - 1][k];
      w[n][k] = v;
    }
  return w;
}

// Stirling numbers, classical recurrences.
inline std::vector<std::vector<Q>> stirling2_triangle(unsigned max_n) {
  return whitney2_triangle(Q(1), 0, max_n);
}
inline std::vector<std::vector<Q>> stirling1_signed_triangle(unsigned max_n) {
  return whitney1_triangle(Q(1), 0, max_n);
}

// Exact Lagrange interpolation: values y_i at nodes x_i (distinct) define a
// unique polynomial of degree < #nodes; returns its coefficients.
inline Poly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys) {
  const std::size_t n = xs.size();
  Poly acc(n, Q(0));
  for (std::size_t i = 0; i < n; ++i) {
    Poly basis(1, Q(1));
    Q denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // basis *= (t - x_j)
      Poly next(basis.size() + 1, Q(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= xs[j] * basis[d];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    const Q w = ys[i] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += w * basis[d];
  }
  return acc;
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly(1, Q(0));
  Poly d(p.size() - 1);
  for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = Q(static_cast<long>(j)) * p[j];
  return d;
}

inline Q poly_eval(const Poly& p, const Q& x) {
  Q acc(0);
  for (std::size_t j = p.size(); j-- > 0;) acc = acc * x + p[j];
  return acc;
}

// Deterministic rational draws: numerator in [-9, 9], denominator in [1, 9].
inline Q random_rational(std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 9) + 1;
    if (nonzero && num == 0) continue;
    Q q(num, den);
    q.canonicalize();
    return q;
  }
}

inline std::vector<Q> random_sequence(std::mt19937_64& rng, std::size_t len) {
  std::vector<Q> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(random_rational(rng, i == 0));
  return v;
}

}  // namespace oracles
