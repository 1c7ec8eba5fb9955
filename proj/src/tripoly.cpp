#include "hypdet/tripoly.hpp"

#include <sstream>

#include "hypdet/error.hpp"
#include "hypdet/real_roots.hpp"

namespace hypdet {

TriPoly TriPoly::constant(const Rational& c) { return monomial(c, {0, 0, 0}); }

TriPoly TriPoly::monomial(const Rational& c, const Exponent3& e) {
  TriPoly p;
  p.add_term(e, c);
  return p;
}

TriPoly TriPoly::linear(const Point3& coeffs) {
  TriPoly p;
  p.add_term({1, 0, 0}, coeffs[0]);
  p.add_term({0, 1, 0}, coeffs[1]);
  p.add_term({0, 0, 1}, coeffs[2]);
  return p;
}

void TriPoly::add_term(const Exponent3& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int TriPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

bool TriPoly::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] + e[2] != d) return false;
  return true;
}

Rational TriPoly::operator()(const Point3& p) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t *= p[static_cast<std::size_t>(i)];
    s += t;
  }
  return s;
}

TriPoly TriPoly::substitute(const RatMatrix& p) const {
  if (p.rows() != 3 || p.cols() != 3) throw DomainError("substitute: expected a 3x3 matrix");
  std::array<TriPoly, 3> lin;
  for (int i = 0; i < 3; ++i) lin[static_cast<std::size_t>(i)] = TriPoly::linear({p(i, 0), p(i, 1), p(i, 2)});
  std::map<std::pair<int, int>, TriPoly> cache;
  auto power = [&](int var, int n) -> const TriPoly& {
    auto key = std::make_pair(var, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, hypdet::pow(lin[static_cast<std::size_t>(var)], static_cast<unsigned>(n))).first->second;
  };
  TriPoly out;
  for (const auto& [e, c] : terms_) out += c * (power(0, e[0]) * power(1, e[1]) * power(2, e[2]));
  return out;
}

BiPoly TriPoly::chart_y() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out += BiPoly::monomial(c, e[0], e[2]);
  return out;
}

BiPoly TriPoly::chart_x() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out += BiPoly::monomial(c, e[1], e[2]);
  return out;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  TriPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

TriPoly operator*(const Rational& c, const TriPoly& a) {
  TriPoly r;
  for (const auto& [e, x] : a.terms_) r.add_term(e, c * x);
  return r;
}

TriPoly pow(const TriPoly& p, unsigned n) {
  TriPoly r = TriPoly::constant(1);
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char kVars[] = {'X', 'Y', 'Z'};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    Rational mag = abs(c);
    bool star = false;
    if (mag != 1 || e == Exponent3{0, 0, 0}) {
      os << hypdet::to_string(mag);
      star = true;
    }
    for (int i = 0; i < 3; ++i) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      os << (star ? "*" : "") << kVars[i];
      if (e[static_cast<std::size_t>(i)] > 1) os << '^' << e[static_cast<std::size_t>(i)];
      star = true;
    }
  }
  return os.str();
}

RatMatrix frame_for_direction(const Point3& e) {
  static const int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    RatMatrix p(3, 3);
    p(pr[0], 0) = 1;
    p(pr[1], 1) = 1;
    for (int i = 0; i < 3; ++i) p(i, 2) = e[static_cast<std::size_t>(i)];
    if (det_bareiss(p) != 0) return p;
  }
  throw DomainError("frame_for_direction: zero direction");
}

bool is_hyperbolic(const TriPoly& f, const Point3& e) {
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("is_hyperbolic: form is not homogeneous");
  const Rational fe = f(e);
  if (fe == 0) throw DomainError("is_hyperbolic: F(e) = 0");
  if (fe < 0) return false;
  TriPoly g = (1 / fe) * f.substitute(frame_for_direction(e));
  return certify_real_rooted(g.chart_y()).verdict == Verdict::real_rooted &&
         certify_real_rooted(g.chart_x()).verdict == Verdict::real_rooted;
}

}  // namespace hypdet
