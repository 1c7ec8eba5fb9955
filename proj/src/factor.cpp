#include "hypdet/factor.hpp"

#include <algorithm>
#include <random>

#include "hypdet/error.hpp"

namespace hypdet {
namespace {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer mod(const Integer& c, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

// Coefficients in (-m/2, m/2].
ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return reduce(std::move(c), m);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return reduce(std::move(c), m);
}

ZPoly mul_plain(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) { return reduce(mul_plain(a, b), m); }

ZPoly scale(const ZPoly& a, const Integer& c, const Integer& m) {
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return reduce(std::move(r), m);
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("non-invertible residue");
  return r;
}

// Division by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b, const Integer& m) {
  a = reduce(std::move(a), m);
  if (deg(a) < deg(b)) return {{}, a};
  Integer inv = inverse_mod(b.back(), m);
  ZPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1));
  for (int i = deg(a); i >= deg(b); --i) {
    Integer c = mod(a[static_cast<std::size_t>(i)] * inv, m);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto& x = a[static_cast<std::size_t>(i - deg(b) + j)];
      x = mod(x - c * b[static_cast<std::size_t>(j)], m);
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

ZPoly rem(const ZPoly& a, const ZPoly& b, const Integer& m) { return divmod(a, b, m).second; }

ZPoly make_monic(const ZPoly& a, const Integer& p) {
  if (a.empty()) return a;
  return scale(a, inverse_mod(a.back(), p), p);
}

ZPoly gcd_mod(ZPoly a, ZPoly b, const Integer& p) {
  a = reduce(std::move(a), p);
  b = reduce(std::move(b), p);
  while (!b.empty()) {
    ZPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 mod p for coprime a, b.
std::pair<ZPoly, ZPoly> ext_gcd_mod(const ZPoly& a, const ZPoly& b, const Integer& p) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("ext_gcd_mod: inputs not coprime");
  Integer inv = inverse_mod(r0[0], p);
  return {scale(s0, inv, p), scale(t0, inv, p)};
}

ZPoly powmod(ZPoly base, Integer e, const ZPoly& f, const Integer& p) {
  ZPoly result{1};
  base = rem(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, p), f, p);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, p), f, p);
  }
  return result;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  trim(d);
  return d;
}

// Distinct-degree factorization of a monic squarefree polynomial mod p.
std::vector<std::pair<ZPoly, int>> ddf(ZPoly f, const Integer& p) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly x{0, 1};
  ZPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, p, f, p);
    ZPoly g = gcd_mod(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd.
void edf(const ZPoly& g, int d, const Integer& p, std::mt19937_64& rng, std::vector<ZPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  const unsigned long pl = p.get_ui();
  while (true) {
    ZPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = static_cast<unsigned long>(rng() % pl);
    trim(a);
    if (deg(a) <= 0) continue;
    ZPoly b = sub(powmod(a, e, g, p), ZPoly{1}, p);
    ZPoly c = gcd_mod(g, b, p);
    if (deg(c) > 0 && deg(c) < deg(g)) {
      edf(c, d, p, rng, out);
      edf(divmod(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& f, const Integer& p, std::mt19937_64& rng) {
  std::vector<ZPoly> out;
  for (auto& [g, d] : ddf(make_monic(f, p), p)) edf(g, d, p, rng, out);
  return out;
}

// Lifts cur = g*h mod p to mod p^k; g monic. Returns (g, h) mod p^k.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& cur, ZPoly g, ZPoly h, const Integer& p, int k) {
  auto [s, t] = ext_gcd_mod(g, h, p);
  Integer pj = p;
  for (int j = 1; j < k; ++j) {
    Integer next = pj * p;
    ZPoly diff = reduce(mul_plain(g, h), next);
    diff = sub(reduce(cur, next), diff, next);
    ZPoly e;
    e.reserve(diff.size());
    for (auto& c : diff) e.push_back(c / pj);
    trim(e);
    e = reduce(e, p);
    ZPoly tau = rem(mul(t, e, p), g, p);
    auto [sigma, r] = divmod(sub(e, mul(tau, h, p), p), reduce(g, p), p);
    if (!r.empty()) throw DomainError("hensel_lift: inconsistent step");
    g = add(g, scale(tau, pj, next), next);
    h = add(h, scale(sigma, pj, next), next);
    pj = next;
  }
  return {g, h};
}

bool is_prime_small(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

UniPoly to_uni(const ZPoly& a) {
  std::vector<Rational> v(a.begin(), a.end());
  return UniPoly(std::move(v));
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Irreducible factors over Z of a primitive squarefree integer polynomial.
std::vector<ZPoly> zassenhaus(ZPoly f) {
  const int n = deg(f);
  if (n <= 1) return {f};
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);

  Integer best_p = 0;
  std::vector<ZPoly> best;
  int tried = 0;
  for (unsigned long q = 3; tried < 4 && q < 100000; q += 2) {
    if (!is_prime_small(q)) continue;
    Integer p = q;
    if (mod(f.back(), p) == 0) continue;
    ZPoly fp = reduce(f, p);
    if (deg(gcd_mod(fp, derivative(fp), p)) > 0) continue;
    std::vector<ZPoly> fac = factor_mod_p(fp, p, rng);
    ++tried;
    if (best.empty() || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.empty()) throw DomainError("zassenhaus: no suitable prime");
  if (best.size() == 1) return {f};
  const Integer p = best_p;

  Integer maxc = 0;
  for (auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc * abs(f.back()) * (n + 1);
  bound <<= static_cast<unsigned>(n + 1);
  int k = 1;
  Integer m = p;
  while (m <= bound) {
    m *= p;
    ++k;
  }

  std::vector<ZPoly> lifted;
  ZPoly cur = reduce(f, m);
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    ZPoly rest{mod(cur.back(), p)};
    for (std::size_t j = i + 1; j < best.size(); ++j) rest = mul(rest, best[j], p);
    auto [g, h] = hensel_lift(cur, best[i], rest, p, k);
    lifted.push_back(g);
    cur = h;
  }
  lifted.push_back(scale(cur, inverse_mod(cur.back(), m), m));

  std::vector<ZPoly> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly rest = f;
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      ZPoly cand{mod(rest.back(), m)};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) cand = mul(cand, lifted[remaining[i]], m);
      cand = primitive(symmetric(cand, m));
      UniPoly cu = to_uni(cand), ru = to_uni(rest);
      if (divides(cu, ru)) {
        out.push_back(cand);
        UniPoly q = exact_div(ru, cu);
        ZPoly qz;
        for (auto& c : q.coefficients()) qz.push_back(c.get_num());
        rest = qz;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (!pick[i]) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (deg(rest) > 0) out.push_back(primitive(rest));
  return out;
}

}  // namespace

UniFactorization factor(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("factor of the zero polynomial");
  UniFactorization out;
  out.unit = p.leading();
  std::vector<UniPoly> parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    Integer den;
    std::vector<Integer> z = integer_coefficients(parts[i], &den);
    for (const ZPoly& g : zassenhaus(primitive(z))) out.factors.emplace_back(to_uni(g).monic(), static_cast<int>(i) + 1);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

namespace {

BiPoly truncate_y(const BiPoly& f, int n) {
  std::vector<UniPoly> v;
  for (const auto& c : f.t_coefficients()) v.push_back(c.truncated(n - 1));
  return BiPoly(std::move(v));
}

// Coefficient of Y^n as a polynomial in T.
UniPoly y_coeff(const BiPoly& f, int n) { return f.x_slice(n); }

BiPoly from_t_poly_times_y(const UniPoly& p, int n) {
  std::vector<UniPoly> v;
  for (const auto& c : p.coefficients()) v.push_back(UniPoly::monomial(c, n));
  return BiPoly(std::move(v));
}

// Lifts G(0,T) = g0 * h0 (coprime, g0 monic) to G = g * h mod Y^(prec).
BiPoly lift_factor(const BiPoly& G, const UniPoly& g0, const UniPoly& h0, int prec) {
  ExtGcd eg = ext_gcd(g0, h0);
  BiPoly g = BiPoly::in_t(g0), h = BiPoly::in_t(h0);
  for (int n = 1; n < prec; ++n) {
    UniPoly e = y_coeff(G - g * h, n);
    if (e.is_zero()) continue;
    UniPoly tau = (eg.t * e) % g0;
    UniPoly sigma = exact_div(e - tau * h0, g0);
    g += from_t_poly_times_y(tau, n);
    h += from_t_poly_times_y(sigma, n);
    g = truncate_y(g, prec);
    h = truncate_y(h, prec);
  }
  return g;
}

std::vector<BiPoly> factor_squarefree_monic(const BiPoly& g) {
  const int d = g.degree_t();
  if (d <= 1) return {g};
  Rational x0 = 0;
  UniPoly disc = discriminant_t(g);
  for (int i = 1; disc(x0) == 0; ++i) x0 = (i % 2 == 1) ? Rational((i + 1) / 2) : Rational(-(i / 2));
  BiPoly G = g.shift_x(x0);
  UniFactorization base = factor(G.eval_x(0));
  if (base.factors.size() == 1) return {g};
  std::vector<UniPoly> rem_factors;
  for (auto& [u, mult] : base.factors) rem_factors.push_back(u);

  const int bound = minimal_grading(g) * d;
  std::vector<BiPoly> out;
  BiPoly rest = G;
  for (std::size_t s = 1; 2 * s <= rem_factors.size();) {
    bool found = false;
    std::vector<bool> pick(rem_factors.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(s), true);
    do {
      UniPoly g0 = UniPoly::constant(1), h0 = UniPoly::constant(1);
      for (std::size_t i = 0; i < rem_factors.size(); ++i) (pick[i] ? g0 : h0) *= rem_factors[i];
      BiPoly cand = lift_factor(rest, g0, h0, bound + 1);
      auto [q, r] = divmod_monic(rest, cand);
      if (r.is_zero()) {
        out.push_back(cand.shift_x(-x0));
        rest = q;
        std::vector<UniPoly> keep;
        for (std::size_t i = 0; i < rem_factors.size(); ++i)
          if (!pick[i]) keep.push_back(rem_factors[i]);
        rem_factors = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (rest.degree_t() > 0) out.push_back(rest.shift_x(-x0));
  return out;
}

}  // namespace

std::vector<std::pair<BiPoly, int>> factor_irreducible(const BiPoly& f) {
  if (!f.is_monic_t()) throw DomainError("factor_irreducible: polynomial not monic in T");
  std::vector<std::pair<BiPoly, int>> out;
  std::vector<BiPoly> parts = squarefree_decomposition(f);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree_t() <= 0) continue;
    for (BiPoly& g : factor_squarefree_monic(parts[i])) out.emplace_back(std::move(g), static_cast<int>(i) + 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const BiPoly& f) {
  auto fac = factor_irreducible(f);
  return fac.size() == 1 && fac[0].second == 1;
}

}  // namespace hypdet
