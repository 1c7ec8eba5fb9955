#include "hypdet/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "hypdet/error.hpp"

namespace hypdet {

BiPoly::BiPoly(std::vector<UniPoly> t_coeffs) : t_coeffs_(std::move(t_coeffs)) { normalize(); }

void BiPoly::normalize() {
  while (!t_coeffs_.empty() && t_coeffs_.back().is_zero()) t_coeffs_.pop_back();
}

BiPoly BiPoly::in_t(const UniPoly& p) {
  std::vector<UniPoly> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::monomial(const Rational& c, int x_exp, int t_exp) {
  std::vector<UniPoly> v(static_cast<std::size_t>(t_exp) + 1);
  v.back() = UniPoly::monomial(c, x_exp);
  return BiPoly(std::move(v));
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& c : t_coeffs_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (int i = 0; i <= degree_t(); ++i)
    if (!t_coeffs_[static_cast<std::size_t>(i)].is_zero()) d = std::max(d, i + t_coeffs_[static_cast<std::size_t>(i)].degree());
  return d;
}

UniPoly BiPoly::coeff(int i) const {
  if (i < 0 || i > degree_t()) return {};
  return t_coeffs_[static_cast<std::size_t>(i)];
}

UniPoly BiPoly::eval_x(const Rational& x) const {
  std::vector<Rational> v;
  v.reserve(t_coeffs_.size());
  for (const auto& c : t_coeffs_) v.push_back(c(x));
  return UniPoly(std::move(v));
}

UniPoly BiPoly::eval_t(const Rational& t) const {
  UniPoly acc;
  for (auto it = t_coeffs_.rbegin(); it != t_coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly BiPoly::x_slice(int n) const {
  std::vector<Rational> v;
  v.reserve(t_coeffs_.size());
  for (const auto& c : t_coeffs_) v.push_back(c.coeff(n));
  return UniPoly(std::move(v));
}

BiPoly BiPoly::d_t() const {
  if (t_coeffs_.size() <= 1) return {};
  std::vector<UniPoly> v(t_coeffs_.size() - 1);
  for (std::size_t i = 1; i < t_coeffs_.size(); ++i) v[i - 1] = t_coeffs_[i] * Rational(static_cast<long>(i));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::d_x() const {
  std::vector<UniPoly> v;
  v.reserve(t_coeffs_.size());
  for (const auto& c : t_coeffs_) v.push_back(c.derivative());
  return BiPoly(std::move(v));
}

BiPoly BiPoly::shift_x(const Rational& c) const {
  std::vector<UniPoly> v;
  v.reserve(t_coeffs_.size());
  for (const auto& a : t_coeffs_) v.push_back(a.shift(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::shift_t(const UniPoly& h) const {
  BiPoly lin({h, UniPoly::constant(1)});
  BiPoly acc;
  for (auto it = t_coeffs_.rbegin(); it != t_coeffs_.rend(); ++it) acc = acc * lin + BiPoly::in_x(*it);
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.t_coeffs_.size() > t_coeffs_.size()) t_coeffs_.resize(o.t_coeffs_.size());
  for (std::size_t i = 0; i < o.t_coeffs_.size(); ++i) t_coeffs_[i] += o.t_coeffs_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.t_coeffs_.size() > t_coeffs_.size()) t_coeffs_.resize(o.t_coeffs_.size());
  for (std::size_t i = 0; i < o.t_coeffs_.size(); ++i) t_coeffs_[i] -= o.t_coeffs_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> v(a.t_coeffs_.size() + b.t_coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.t_coeffs_.size(); ++i) {
    if (a.t_coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.t_coeffs_.size(); ++j) v[i + j] += a.t_coeffs_[i] * b.t_coeffs_[j];
  }
  return BiPoly(std::move(v));
}

BiPoly operator*(const UniPoly& a, const BiPoly& b) {
  std::vector<UniPoly> v;
  v.reserve(b.t_coeffs_.size());
  for (const auto& c : b.t_coeffs_) v.push_back(a * c);
  return BiPoly(std::move(v));
}

BiPoly operator*(const Rational& a, const BiPoly& b) {
  std::vector<UniPoly> v;
  v.reserve(b.t_coeffs_.size());
  for (const auto& c : b.t_coeffs_) v.push_back(c * a);
  return BiPoly(std::move(v));
}

bool operator<(const BiPoly& a, const BiPoly& b) {
  if (a.degree_t() != b.degree_t()) return a.degree_t() < b.degree_t();
  for (int i = a.degree_t(); i >= 0; --i) {
    const auto& x = a.t_coeffs_[static_cast<std::size_t>(i)];
    const auto& y = b.t_coeffs_[static_cast<std::size_t>(i)];
    if (x < y) return true;
    if (y < x) return false;
  }
  return false;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree_t(); i >= 0; --i) {
    const UniPoly& c = t_coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    for (int j = c.degree(); j >= 0; --j) {
      const Rational& a = c.coefficients()[static_cast<std::size_t>(j)];
      if (sgn(a) == 0) continue;
      Rational mag = abs(a);
      if (first) {
        if (sgn(a) < 0) os << '-';
      } else {
        os << (sgn(a) < 0 ? " - " : " + ");
      }
      first = false;
      bool need_star = false;
      if (mag != 1 || (i == 0 && j == 0)) {
        os << hypdet::to_string(mag);
        need_star = true;
      }
      if (j > 0) {
        os << (need_star ? "*" : "") << 'X';
        if (j > 1) os << '^' << j;
        need_star = true;
      }
      if (i > 0) {
        os << (need_star ? "*" : "") << 'T';
        if (i > 1) os << '^' << i;
      }
    }
  }
  return os.str();
}

BiPoly pow(const BiPoly& p, unsigned n) {
  BiPoly result = BiPoly::constant(1), base = p;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DomainError("bivariate division by zero");
  BiPoly r = a;
  const int db = b.degree_t();
  std::vector<UniPoly> q(static_cast<std::size_t>(std::max(a.degree_t() - db + 1, 0)));
  while (!r.is_zero()) {
    const int dr = r.degree_t();
    if (dr < db) throw DomainError("inexact bivariate division");
    UniPoly c = exact_div(r.leading_t(), b.leading_t());
    q[static_cast<std::size_t>(dr - db)] = c;
    std::vector<UniPoly> shifted(static_cast<std::size_t>(dr - db) + 1);
    shifted.back() = c;
    BiPoly next = r - BiPoly(std::move(shifted)) * b;
    if (!next.is_zero() && next.degree_t() >= dr) throw DomainError("inexact bivariate division");
    r = std::move(next);
  }
  return BiPoly(std::move(q));
}

std::pair<BiPoly, BiPoly> divmod_monic(const BiPoly& a, const BiPoly& b) {
  if (!b.is_monic_t()) throw DomainError("divmod_monic: divisor not monic in T");
  const int db = b.degree_t();
  std::vector<UniPoly> r = a.t_coefficients();
  std::vector<UniPoly> q(static_cast<std::size_t>(std::max(a.degree_t() - db + 1, 0)));
  for (int i = a.degree_t(); i >= db; --i) {
    UniPoly c = r[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(std::min<int>(db, static_cast<int>(r.size()))));
  return {BiPoly(std::move(q)), BiPoly(std::move(r))};
}

BiPoly prem(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  const int db = b.degree_t();
  const UniPoly& lb = b.leading_t();
  BiPoly r = a;
  while (!r.is_zero() && r.degree_t() >= db) {
    const int dr = r.degree_t();
    BiPoly term = BiPoly::monomial(1, 0, dr - db);
    r = lb * r - r.leading_t() * (term * b);
  }
  return r;
}

UniPoly content_x(const BiPoly& p) {
  UniPoly g;
  for (const auto& c : p.t_coefficients()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return {};
  UniPoly c = content_x(p);
  std::vector<UniPoly> v;
  v.reserve(p.t_coefficients().size());
  for (const auto& a : p.t_coefficients()) v.push_back(exact_div(a, c));
  return BiPoly(std::move(v));
}

BiPoly normalize_leading(const BiPoly& p) {
  if (p.is_zero()) return p;
  return (1 / p.leading_t().leading()) * p;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  UniPoly c = gcd(content_x(a), content_x(b));
  BiPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree_t() < y.degree_t()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree_t() == 0) {
      x = BiPoly::constant(1);
      break;
    }
    BiPoly r = prem(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return normalize_leading(c * primitive_part(x));
}

UniPoly resultant_t(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero polynomial");
  const int m = f.degree_t(), n = g.degree_t();
  if (m == 0) return pow(f.coeff(0), static_cast<unsigned>(n));
  if (n == 0) return pow(g.coeff(0), static_cast<unsigned>(m));
  const int size = m + n;
  PolyMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s(r, r + i) = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(n + r, r + i) = g.coeff(n - i);
  return det_bareiss(s);
}

UniPoly discriminant_t(const BiPoly& f) { return resultant_t(f, f.d_t()); }

bool grading_member(const BiPoly& f, int k, int d) {
  if (f.degree_t() > d) return false;
  for (int i = 0; i <= f.degree_t(); ++i)
    if (f.coeff(i).degree() > k * (d - i)) return false;
  return true;
}

int minimal_grading(const BiPoly& f) {
  if (f.is_zero()) throw DomainError("minimal_grading of the zero polynomial");
  const int d = f.degree_t();
  int k = 0;
  for (int i = 0; i < d; ++i) {
    int deg = f.coeff(i).degree();
    if (deg <= 0) continue;
    int need = (deg + (d - i) - 1) / (d - i);
    k = std::max(k, need);
  }
  if (f.coeff(d).degree() > 0) throw DomainError("minimal_grading: leading T-coefficient depends on X");
  return k;
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree_part of the zero polynomial");
  UniPoly c = content_x(p);
  UniPoly c_sqf = c.degree() > 0 ? squarefree_part(c) : UniPoly::constant(1);
  BiPoly q = primitive_part(p);
  BiPoly q_sqf = q;
  if (q.degree_t() > 0) q_sqf = exact_div(q, gcd(q, q.d_t()));
  return normalize_leading(c_sqf * q_sqf);
}

std::vector<BiPoly> squarefree_decomposition(const BiPoly& f) {
  if (!f.is_monic_t()) throw DomainError("squarefree_decomposition: polynomial not monic in T");
  std::vector<BiPoly> parts;
  if (f.degree_t() == 0) return parts;
  BiPoly fp = f.d_t();
  BiPoly a = gcd(f, fp);
  BiPoly b = exact_div(f, a);
  BiPoly c = exact_div(fp, a);
  BiPoly d = c - b.d_t();
  while (b.degree_t() > 0) {
    BiPoly g = gcd(b, d);
    parts.push_back(g);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.d_t();
  }
  while (!parts.empty() && parts.back().degree_t() == 0) parts.pop_back();
  for (auto& part : parts) part = normalize_leading(part);
  return parts;
}

BiPoly char_poly(const PolyMatrix& a) {
  std::vector<UniPoly> coeffs = charpoly_berkowitz(a);
  return BiPoly(std::move(coeffs));
}

}  // namespace hypdet
