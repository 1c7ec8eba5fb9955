#include "hypdet/diagonalize.hpp"

#include <cmath>

#include "hypdet/error.hpp"
#include "hypdet/ratfunc.hpp"

namespace hypdet {
namespace {

using Vec = std::vector<UniPoly>;

UniPoly form(const PolyMatrix& g, const Vec& u, const Vec& v) {
  UniPoly s;
  const int n = g.rows();
  for (int i = 0; i < n; ++i) {
    if (u[static_cast<std::size_t>(i)].is_zero()) continue;
    UniPoly row;
    for (int j = 0; j < n; ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero()) row += g(i, j) * v[static_cast<std::size_t>(j)];
    s += u[static_cast<std::size_t>(i)] * row;
  }
  return s;
}

PolyMatrix gram(const PolyMatrix& g, const std::vector<Vec>& basis) {
  const int m = static_cast<int>(basis.size());
  PolyMatrix a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      a(i, j) = form(g, basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      a(j, i) = a(i, j);
    }
  return a;
}

void axpy(Vec& y, const UniPoly& a, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

// Rewrites the basis until the leading matrix for weights W is
// nonsingular; returns the weights.
std::vector<int> degree_reduce(const PolyMatrix& g, std::vector<Vec>& basis) {
  const int m = static_cast<int>(basis.size());
  PolyMatrix a = gram(g, basis);
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) w[static_cast<std::size_t>(i)] = std::max(w[static_cast<std::size_t>(i)], a(i, j).degree());
  while (true) {
    long total = 0;
    for (int x : w) total += x;
    if (total == 0) return w;
    if (total < 0) throw DomainError("orthogonal_basis: form is not unimodular");
    bool reduced = false;
    for (int parity = 0; parity < 2 && !reduced; ++parity) {
      std::vector<int> cls;
      for (int i = 0; i < m; ++i)
        if (((w[static_cast<std::size_t>(i)] % 2) + 2) % 2 == parity) cls.push_back(i);
      if (cls.empty()) continue;
      const int c = static_cast<int>(cls.size());
      RatMatrix lead(c, c);
      for (int x = 0; x < c; ++x)
        for (int y = 0; y < c; ++y) {
          const int i = cls[static_cast<std::size_t>(x)], j = cls[static_cast<std::size_t>(y)];
          lead(x, y) = a(i, j).coeff((w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)]) / 2);
        }
      auto kernel = nullspace(lead);
      if (kernel.empty()) continue;
      const auto& kv = kernel.front();
      int r = -1;
      for (int x = 0; x < c; ++x) {
        if (kv[static_cast<std::size_t>(x)] == 0) continue;
        const int i = cls[static_cast<std::size_t>(x)];
        if (r < 0 || w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(r)]) r = i;
      }
      Rational cr;
      for (int x = 0; x < c; ++x)
        if (cls[static_cast<std::size_t>(x)] == r) cr = kv[static_cast<std::size_t>(x)];
      Vec next = basis[static_cast<std::size_t>(r)];
      for (int x = 0; x < c; ++x) {
        const int j = cls[static_cast<std::size_t>(x)];
        if (j == r || kv[static_cast<std::size_t>(x)] == 0) continue;
        axpy(next, UniPoly::monomial(kv[static_cast<std::size_t>(x)] / cr, (w[static_cast<std::size_t>(r)] - w[static_cast<std::size_t>(j)]) / 2),
             basis[static_cast<std::size_t>(j)]);
      }
      basis[static_cast<std::size_t>(r)] = std::move(next);
      w[static_cast<std::size_t>(r)] -= 1;
      a = gram(g, basis);
      reduced = true;
    }
    if (!reduced) throw DomainError("orthogonal_basis: degree reduction stalled");
  }
}

// Basis of the Q[X]-span of vectors (row Hermite form, zero rows dropped).
std::vector<Vec> span_basis(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        const UniPoly& e = rows[r][col];
        if (!e.is_zero() && (best == rows.size() || e.degree() < rows[best][col].degree())) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col].is_zero()) continue;
        axpy(rows[r], -(rows[r][col] / rows[top][col]), rows[top]);
        if (!rows[r][col].is_zero()) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  return rows;
}

}  // namespace

OrthoResult orthogonal_basis(const PolyMatrix& g) {
  if (!g.is_symmetric()) throw DomainError("orthogonal_basis: matrix not symmetric");
  UniPoly det = det_bareiss(g);
  if (det.is_zero() || det.degree() != 0) throw DomainError("orthogonal_basis: form is not unimodular");
  const int n = g.rows();
  std::vector<Vec> active;
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = UniPoly::constant(1);
    active.push_back(std::move(e));
  }
  std::vector<Vec> done;
  std::vector<Rational> lambda;

  auto split_off = [&](std::size_t i, const Rational& value) {
    Vec v = active[i];
    active.erase(active.begin() + static_cast<long>(i));
    for (auto& u : active) {
      UniPoly c = form(g, u, v);
      if (!c.is_zero()) axpy(u, -(c * (1 / value)), v);
    }
    done.push_back(std::move(v));
    lambda.push_back(value);
  };

  while (!active.empty()) {
    PolyMatrix a = gram(g, active);
    const int m = static_cast<int>(active.size());
    bool split = false;
    for (int i = 0; i < m && !split; ++i)
      if (a(i, i).degree() == 0) {
        split_off(static_cast<std::size_t>(i), a(i, i).coeff(0));
        split = true;
      }
    if (split) continue;

    std::vector<int> w = degree_reduce(g, active);
    a = gram(g, active);
    int s = -1;
    for (int i = 0; i < m; ++i) {
      if (a(i, i).degree() == 0) split = true;
      if (w[static_cast<std::size_t>(i)] < 0 || (s < 0 && a(i, i).is_zero())) s = i;
    }
    if (split) continue;
    if (s < 0) throw DomainError("orthogonal_basis: degenerate form");
    auto inv = inverse(to_ratfunc(a));
    if (!inv) throw DomainError("orthogonal_basis: form is not unimodular");
    PolyMatrix ainv = to_poly(*inv);
    Vec y(static_cast<std::size_t>(n));
    for (int j = 0; j < m; ++j) axpy(y, ainv(j, s), active[static_cast<std::size_t>(j)]);
    const Vec& qs = active[static_cast<std::size_t>(s)];
    UniPoly yy = form(g, y, y);
    axpy(y, -(yy * Rational(1, 2)), qs);
    Vec u1 = qs, u2 = qs;
    axpy(u1, UniPoly::constant(1), y);
    axpy(u2, UniPoly::constant(-1), y);
    std::vector<Vec> rest;
    for (int j = 0; j < m; ++j) {
      Vec v = active[static_cast<std::size_t>(j)];
      UniPoly by = form(g, v, y), bq = form(g, v, qs);
      axpy(v, -by, qs);
      axpy(v, -bq, y);
      rest.push_back(std::move(v));
    }
    done.push_back(std::move(u1));
    lambda.push_back(2);
    done.push_back(std::move(u2));
    lambda.push_back(-2);
    active = span_basis(std::move(rest));
  }

  OrthoResult out;
  out.q = PolyMatrix(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out.q(i, j) = done[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  out.lambda = std::move(lambda);
  return out;
}

bool positivity_check(const OrthoResult& r) {
  for (const auto& l : r.lambda)
    if (l <= 0) return false;
  return true;
}

bool check_dsym(const DSymCertificate& c) {
  const int n = c.m.rows();
  if (!c.m.square() || static_cast<int>(c.d.size()) != n) return false;
  for (const auto& x : c.d)
    if (x <= 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c.m(i, j) * c.d[static_cast<std::size_t>(i)] != c.m(j, i) * c.d[static_cast<std::size_t>(j)]) return false;
  return true;
}

NumericPolyMatrix to_numeric(const PolyMatrix& m) {
  NumericPolyMatrix out;
  out.d = m.rows();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.entries.push_back(m(i, j).to_double());
  return out;
}

std::pair<DSymCertificate, NumericPolyMatrix> symmetrize(const PolyMatrix& m, const std::vector<Rational>& d) {
  DSymCertificate c{m, d};
  for (const auto& x : d)
    if (x <= 0) throw DomainError("symmetrize: D must be positive");
  if (!check_dsym(c)) throw VerificationError("symmetrize: D*M differs from M^T*D");
  NumericPolyMatrix a = to_numeric(m);
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) {
      const double s = std::sqrt(d[static_cast<std::size_t>(i)].get_d() / d[static_cast<std::size_t>(j)].get_d());
      for (auto& x : a.entries[static_cast<std::size_t>(i * a.d + j)]) x *= s;
    }
  return {c, a};
}

}  // namespace hypdet
