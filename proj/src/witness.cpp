#include "hypdet/witness.hpp"

#include <algorithm>
#include <numeric>

#include "hypdet/error.hpp"

namespace hypdet {

WitnessBlock witness_block(const IdealWitness& w) {
  if (!verify_square(w)) throw VerificationError("witness rejected: I^2 differs from (c/f'(alpha))");
  GramForm g = beta_gram(w.basis, w.c);
  if (!g.unimodular) throw VerificationError("witness rejected: trace form is not unimodular");
  WitnessBlock out;
  out.ortho = orthogonal_basis(g.gram);
  if (!positivity_check(out.ortho)) throw VerificationError("witness rejected: trace form is not positive");
  PolyMatrix mb = mult_alpha_matrix(w.basis);
  auto qinv = inverse(to_ratfunc(out.ortho.q));
  if (!qinv) throw VerificationError("orthogonal basis is singular");
  PolyMatrix m = to_poly(*qinv * to_ratfunc(mb * out.ortho.q));
  out.cert = {m, out.ortho.lambda};
  if (!check_dsym(out.cert)) throw VerificationError("D*M differs from M^T*D");
  const auto& lam = out.ortho.lambda;
  std::vector<Rational> s(lam.size());
  bool squares = true;
  for (std::size_t i = 0; i < lam.size() && squares; ++i) squares = rational_sqrt(lam[i] / lam[0], &s[i]);
  if (squares) {
    PolyMatrix sym = m;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) sym(i, j) = m(i, j) * (s[static_cast<std::size_t>(i)] / s[static_cast<std::size_t>(j)]);
    if (sym.is_symmetric()) out.symmetric = sym;
  }
  return out;
}

namespace {

struct SearchSpace {
  BiPoly f;
  int k = 0, d = 0, bound = 0, height = 0;
  std::uint64_t seed = 0;
  ModulusPtr mod;
  QuotElem fprime;
  std::vector<QuotElem> unit;
  // Level deg holds the codes [lo[deg], hi[deg]): coordinates of X-degree
  // <= deg with at least one X^deg coefficient nonzero.
  std::vector<long> lo, hi;
};

SearchSpace make_space(const BiPoly& f, int k, const WitnessSearchOptions& opt) {
  if (!f.is_monic_t()) throw DomainError("find_witness: polynomial not monic in T");
  if (opt.height < 1) throw DomainError("find_witness: height must be positive");
  SearchSpace s;
  s.f = f;
  s.k = k;
  s.d = f.degree_t();
  s.bound = opt.degree_bound >= 0 ? opt.degree_bound : k * s.d;
  s.height = opt.height;
  s.seed = opt.seed;
  s.mod = make_modulus(f);
  if (!s.mod->separable()) throw DomainError("find_witness: polynomial is not separable");
  s.fprime = derivative_at_alpha(s.mod);
  s.unit = unit_ideal(s.mod);
  const long base = 2L * s.height + 1;
  const long limit = 1L << 62;
  long power = 1;
  for (int deg = 0; deg <= s.bound; ++deg) {
    long next = power;
    bool overflow = false;
    for (int j = 0; j < s.d; ++j) {
      if (next > limit / base) {
        overflow = true;
        break;
      }
      next *= base;
    }
    if (overflow) break;
    s.lo.push_back(deg == 0 ? 1 : power);
    s.hi.push_back(next);
    power = next;
  }
  return s;
}

// 0, 1, -1, 2, -2, ...
long digit_value(long digit) { return (digit % 2 == 1) ? (digit + 1) / 2 : -(digit / 2); }

// Candidate at position pos inside degree level deg.
QuotElem candidate(const SearchSpace& s, int deg, long pos) {
  const long span = s.hi[static_cast<std::size_t>(deg)] - s.lo[static_cast<std::size_t>(deg)];
  long idx = pos;
  if (s.seed != 0) {
    long a = static_cast<long>(s.seed % static_cast<std::uint64_t>(span)) | 1;
    while (std::gcd(a, span) != 1) a += 2;
    idx = static_cast<long>((static_cast<__int128>(pos) * a + static_cast<long>((s.seed >> 17) % static_cast<std::uint64_t>(span))) % span);
  }
  long code = s.lo[static_cast<std::size_t>(deg)] + idx;
  const long base = 2L * s.height + 1;
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(s.d), std::vector<Rational>(static_cast<std::size_t>(deg) + 1));
  for (int i = 0; code > 0; ++i, code /= base) c[static_cast<std::size_t>(i % s.d)][static_cast<std::size_t>(i / s.d)] = digit_value(code % base);
  std::vector<RatFunc> coords;
  for (auto& v : c) coords.emplace_back(UniPoly(std::move(v)));
  return QuotElem(s.mod, std::move(coords));
}

bool is_unit(const QuotElem& u) {
  RatFuncMatrix m = u.mult_matrix();
  PolyMatrix pm = to_poly(m);
  UniPoly n = det_bareiss(pm);
  return !n.is_zero() && n.degree() == 0;
}

bool accept(const SearchSpace& s, const QuotElem& u) {
  try {
    if (u.is_zero() || !is_unit(u)) return false;
    IdealWitness w{s.mod, s.unit, u * s.fprime};
    witness_block(w);
    return true;
  } catch (const Error&) {
    return false;
  }
}

WitnessSearchResult make_result(const SearchSpace& s, int deg, long pos, long tested) {
  WitnessSearchResult r;
  r.witness = {s.mod, s.unit, candidate(s, deg, pos) * s.fprime};
  r.position = pos;
  for (int i = 0; i < deg; ++i) r.position += s.hi[static_cast<std::size_t>(i)] - s.lo[static_cast<std::size_t>(i)];
  r.tested = tested;
  return r;
}

template <bool Parallel>
std::optional<WitnessSearchResult> search(const BiPoly& f, int k, const WitnessSearchOptions& opt) {
  SearchSpace s = make_space(f, k, opt);
  long tested = 0;
  const int levels = static_cast<int>(s.lo.size());
  for (int deg = 0; deg < levels; ++deg) {
    const long span = s.hi[static_cast<std::size_t>(deg)] - s.lo[static_cast<std::size_t>(deg)];
    const long chunk = 4096;
    for (long start = 0; start < span; start += chunk) {
      if (tested >= opt.max_candidates) return std::nullopt;
      const long end = std::min(span, std::min(start + chunk, start + (opt.max_candidates - tested)));
      long found = -1;
      if constexpr (Parallel) {
        long best = span;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
        for (long pos = start; pos < end; ++pos) {
          if (pos < best && accept(s, candidate(s, deg, pos))) best = std::min(best, pos);
        }
        if (best < span) found = best;
      } else {
        for (long pos = start; pos < end && found < 0; ++pos)
          if (accept(s, candidate(s, deg, pos))) found = pos;
      }
      if (found >= 0) return make_result(s, deg, found, tested + (found - start) + 1);
      tested += end - start;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessSearchResult> find_witness(const BiPoly& f, int k, const WitnessSearchOptions& opt) {
  return search<true>(f, k, opt);
}

std::optional<WitnessSearchResult> find_witness_serial(const BiPoly& f, int k, const WitnessSearchOptions& opt) {
  return search<false>(f, k, opt);
}

}  // namespace hypdet
