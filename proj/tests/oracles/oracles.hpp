#pragma once

// Test-side reference computations. These deliberately avoid the library's
// algorithms and use only its arithmetic types.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hypdet/bipoly.hpp"
#include "hypdet/matrix.hpp"
#include "hypdet/upoly.hpp"

namespace oracle {

using hypdet::BiPoly;
using hypdet::Matrix;
using hypdet::PolyMatrix;
using hypdet::Rational;
using hypdet::UniPoly;

inline Rational rand_rational(std::mt19937_64& rng, int height, bool integral = false) {
  std::uniform_int_distribution<int> num(-height, height), den(1, height);
  if (integral) return Rational(num(rng));
  const int n = num(rng);
  return hypdet::make_rational(n, den(rng));
}

inline UniPoly rand_uni(std::mt19937_64& rng, int degree, int height) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rand_rational(rng, height, true));
  return UniPoly(std::move(c));
}

// Monic in T with coefficients in Q[X] of X-degree <= xdeg.
inline BiPoly rand_monic(std::mt19937_64& rng, int d, int xdeg, int height) {
  std::vector<UniPoly> c;
  for (int i = 0; i < d; ++i) c.push_back(rand_uni(rng, xdeg, height));
  c.push_back(UniPoly::constant(1));
  return BiPoly(std::move(c));
}

// Leibniz expansion; fine for the small sizes used in tests.
template <class R>
R det_leibniz(const Matrix<R>& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  R total = hypdet::RingTraits<R>::zero();
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    R term = hypdet::RingTraits<R>::one();
    for (int i = 0; i < n; ++i) term = term * m(i, perm[static_cast<std::size_t>(i)]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// det(T*I - A) by Leibniz over Q[X][T].
inline BiPoly charpoly(const PolyMatrix& a) {
  const int n = a.rows();
  Matrix<BiPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (i == j ? BiPoly::var_t() : BiPoly()) - BiPoly::in_x(a(i, j));
  return det_leibniz(m);
}

// Coefficient of T^{-1} in the Laurent expansion of a(T) b(T) / f(T) at
// infinity, i.e. the sum of a b / f' over the roots of f.
inline UniPoly residue_pairing(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b, const BiPoly& f) {
  const int d = f.degree_t();
  std::vector<UniPoly> c(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  const int top = static_cast<int>(c.size()) - 1;
  std::vector<UniPoly> h(static_cast<std::size_t>(std::max(1, top - d + 2)));
  h[0] = UniPoly::constant(1);
  for (std::size_t n = 1; n < h.size(); ++n)
    for (std::size_t j = 1; j <= n; ++j)
      if (static_cast<int>(j) <= d) h[n] -= f.coeff(d - static_cast<int>(j)) * h[n - j];
  UniPoly out;
  for (int i = d - 1; i <= top; ++i) out += c[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(i - d + 1)];
  return out;
}

// Newton identities for a monic f.
inline std::vector<UniPoly> newton_power_sums(const BiPoly& f, int count) {
  const int d = f.degree_t();
  auto a = [&](int i) { return i >= 0 ? f.coeff(i) : UniPoly(); };
  std::vector<UniPoly> p(static_cast<std::size_t>(count));
  p[0] = UniPoly::constant(d);
  for (int m = 1; m < count; ++m) {
    UniPoly s = m <= d ? a(d - m) * Rational(-m) : UniPoly();
    for (int i = 1; i < m && i <= d; ++i) s -= a(d - i) * p[static_cast<std::size_t>(m - i)];
    p[static_cast<std::size_t>(m)] = s;
  }
  return p;
}

inline PolyMatrix hermite(const BiPoly& f) {
  const int d = f.degree_t();
  auto p = newton_power_sums(f, 2 * d);
  PolyMatrix h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = p[static_cast<std::size_t>(i + j)];
  return h;
}

inline int sign_at_infinity(const UniPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = p.leading() > 0 ? 1 : -1;
  return (!positive && p.degree() % 2 == 1) ? -s : s;
}

// Distinct real roots from the classical Sturm chain, counted between -inf and +inf.
inline int distinct_real_roots(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2] % chain.back();
    chain.push_back(-r);
  }
  chain.pop_back();
  auto variations = [&](bool positive) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
      int s = sign_at_infinity(q, positive);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

inline bool strictly_real_rooted(const UniPoly& p) {
  return p.degree() >= 1 && distinct_real_roots(p) == p.degree();
}

// Positive definiteness through symmetric Gaussian elimination.
inline bool positive_definite(Matrix<Rational> m) {
  const int n = m.rows();
  for (int k = 0; k < n; ++k) {
    if (m(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return true;
}

inline Matrix<Rational> eval_at(const PolyMatrix& m, const Rational& x) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j)(x);
  return r;
}

// prod (T - r)^m
inline UniPoly from_roots(const std::vector<std::pair<Rational, int>>& roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& [r, m] : roots)
    for (int i = 0; i < m; ++i) p *= UniPoly{-r, 1};
  return p;
}

// Multiplicity of r as a root of p, by repeated exact division.
inline int multiplicity(UniPoly p, const Rational& r) {
  if (p.is_zero()) return -1;
  int m = 0;
  const UniPoly lin{-r, 1};
  while (p(r) == 0) {
    p = p / lin;
    ++m;
  }
  return m;
}

// Random symmetric matrix over Q[X] with entries of degree <= k.
inline PolyMatrix rand_symmetric(std::mt19937_64& rng, int d, int k, int height) {
  PolyMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      a(i, j) = rand_uni(rng, k, height);
      a(j, i) = a(i, j);
    }
  return a;
}

}  // namespace oracle

namespace oracle {

// P^T D P with D constant nonzero diagonal and P a product of random
// elementary matrices over Q[X]; returns {G, det G}.
inline std::pair<PolyMatrix, Rational> rand_unimodular_form(std::mt19937_64& rng, int d, int deg) {
  PolyMatrix p = PolyMatrix::identity(d);
  std::uniform_int_distribution<int> idx(0, d - 1);
  for (int step = 0; step < 2 * d; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    UniPoly s = rand_uni(rng, deg, 2);
    for (int col = 0; col < d; ++col) p(i, col) += s * p(j, col);
  }
  PolyMatrix dm(d, d);
  Rational det = 1;
  for (int i = 0; i < d; ++i) {
    Rational v = rand_rational(rng, 3, true);
    if (v == 0) v = 1;
    dm(i, i) = UniPoly::constant(v);
    det *= v;
  }
  return {p.transpose() * dm * p, det};
}

}  // namespace oracle
