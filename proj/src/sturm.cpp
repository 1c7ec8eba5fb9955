#include "hypdet/sturm.hpp"

#include <algorithm>

#include "hypdet/error.hpp"

namespace hypdet {
namespace {

// Positive multiple with coprime integer coefficients; signs are unchanged.
UniPoly primitive_positive(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den;
  std::vector<Integer> c = integer_coefficients(p, &den);
  Integer g = 0;
  for (const auto& x : c) g = gcd(g, x);
  std::vector<Rational> out;
  out.reserve(c.size());
  for (const auto& x : c) out.emplace_back(x / g);
  return UniPoly(std::move(out));
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{primitive_positive(p), primitive_positive(p.derivative())};
  while (!chain.back().is_zero()) {
    UniPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive_positive(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_at_plus_inf(const UniPoly& q) { return sgn(q.leading()); }
int sign_at_minus_inf(const UniPoly& q) { return (q.degree() % 2 == 0) ? sgn(q.leading()) : -sgn(q.leading()); }

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<UniPoly>& chain, const std::optional<Rational>& x, bool plus) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) {
    if (x) s.push_back(sgn(q(*x)));
    else s.push_back(plus ? sign_at_plus_inf(q) : sign_at_minus_inf(q));
  }
  return variations(s);
}

Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

void isolate_rec(const UniPoly& p, const std::vector<UniPoly>& chain, Rational lo, Rational hi, int count,
                 std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (p(mid) == 0) {
    Rational delta = (hi - lo) / 4;
    while (true) {
      Rational a = mid - delta, b = mid + delta;
      if (p(a) != 0 && p(b) != 0 && variations_at(chain, a, false) - variations_at(chain, b, true) == 1) break;
      delta /= 2;
    }
    Rational a = mid - delta, b = mid + delta;
    int left = variations_at(chain, lo, false) - variations_at(chain, a, true);
    int right = variations_at(chain, b, false) - variations_at(chain, hi, true);
    isolate_rec(p, chain, lo, a, left, out);
    out.push_back({mid, mid});
    isolate_rec(p, chain, b, hi, right, out);
    return;
  }
  int left = variations_at(chain, lo, false) - variations_at(chain, mid, true);
  isolate_rec(p, chain, lo, mid, left, out);
  isolate_rec(p, chain, mid, hi, count - left, out);
}

}  // namespace

int sturm_count(const UniPoly& p, const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (p.is_zero()) throw DomainError("sturm_count of the zero polynomial");
  if (a && p(*a) == 0) throw DomainError("sturm_count: left endpoint is a root");
  if (b && p(*b) == 0) throw DomainError("sturm_count: right endpoint is a root");
  if (a && b && *b <= *a) return 0;
  auto chain = sturm_chain(p);
  return variations_at(chain, a, false) - variations_at(chain, b, true);
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("isolate_real_roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  UniPoly q = squarefree_part(p);
  Rational m = cauchy_bound(q);
  auto chain = sturm_chain(q);
  int total = variations_at(chain, -m, false) - variations_at(chain, m, true);
  isolate_rec(q, chain, -m, m, total, out);
  return out;
}

RootInterval refine(const UniPoly& p, RootInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  int s_hi = sgn(p(iv.hi));
  while (iv.hi - iv.lo > width) {
    Rational mid = iv.midpoint();
    int s = sgn(p(mid));
    if (s == 0) return {mid, mid};
    if (s == s_hi) iv.hi = mid;
    else iv.lo = mid;
  }
  return iv;
}

int count_distinct_real_roots(const UniPoly& p) {
  if (p.degree() < 1) return 0;
  return sturm_count(squarefree_part(p));
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) return false;
  UniPoly q = squarefree_part(p);
  return q.degree() < 1 || sturm_count(q) == q.degree();
}

bool is_strictly_real_rooted(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0 && sturm_count(p) == p.degree();
}

std::optional<Rational> find_negative_point(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  if (p(0) < 0) return Rational(0);
  if (p.degree() < 1) return std::nullopt;
  std::vector<UniPoly> parts = squarefree_decomposition(p);
  UniPoly odd = UniPoly::constant(1);
  for (std::size_t i = 0; i < parts.size(); i += 2) odd *= parts[i];
  if (p.leading() > 0 && (odd.degree() < 1 || sturm_count(odd) == 0)) return std::nullopt;
  auto roots = isolate_real_roots(p);
  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.push_back(0);
  } else {
    samples.push_back(roots.front().lo - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
    samples.push_back(roots.back().hi + 1);
  }
  for (const auto& x : samples)
    if (p(x) < 0) return x;
  throw DomainError("find_negative_point: no sample point found");
}

std::optional<PositivityFailure> check_positive(const UniPoly& p) {
  if (p.is_zero() || p(0) <= 0) return PositivityFailure{Rational(0), std::nullopt};
  if (p.degree() < 1) return std::nullopt;
  if (sturm_count(p) == 0) return std::nullopt;
  if (auto neg = find_negative_point(p)) return PositivityFailure{*neg, std::nullopt};
  for (const auto& iv : isolate_real_roots(p))
    if (iv.exact()) return PositivityFailure{iv.lo, std::nullopt};
  return PositivityFailure{std::nullopt, isolate_real_roots(p).front()};
}

std::vector<std::pair<RootInterval, int>> multiplicity_profile(const UniPoly& p) {
  if (!is_real_rooted(p)) throw DomainError("multiplicity_profile: polynomial is not real rooted");
  std::vector<std::pair<RootInterval, int>> out;
  if (p.degree() < 1) return out;
  std::vector<UniPoly> parts = squarefree_decomposition(p);
  for (const auto& iv : isolate_real_roots(p)) {
    int mult = 0;
    for (std::size_t j = 0; j < parts.size() && mult == 0; ++j) {
      if (parts[j].degree() < 1) continue;
      bool hit = iv.exact() ? parts[j](iv.lo) == 0 : sturm_count(parts[j], iv.lo, iv.hi) == 1;
      if (hit) mult = static_cast<int>(j) + 1;
    }
    out.emplace_back(iv, mult);
  }
  return out;
}

std::vector<double> approximate_real_roots(const UniPoly& p) {
  std::vector<double> out;
  if (p.degree() < 1) return out;
  std::vector<UniPoly> parts = squarefree_decomposition(p);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].degree() < 1) continue;
    for (auto iv : isolate_real_roots(parts[j])) {
      iv = refine(parts[j], iv, Rational(1) / Rational(Integer(1) << 50) * (1 + abs(iv.lo)));
      for (std::size_t m = 0; m <= j; ++m) out.push_back(iv.midpoint().get_d());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hypdet
