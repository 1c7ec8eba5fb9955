#include "hypdet/real_roots.hpp"

#include "hypdet/algfield.hpp"
#include "hypdet/error.hpp"
#include "hypdet/factor.hpp"
#include "hypdet/hermite.hpp"
#include "hypdet/kernels.hpp"

namespace hypdet {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::real_rooted:
      return "real_rooted";
    case Verdict::strictly_real_rooted:
      return "strictly_real_rooted";
    case Verdict::rejected:
      return "rejected";
  }
  return "rejected";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "real_rooted") return Verdict::real_rooted;
  if (s == "strictly_real_rooted") return Verdict::strictly_real_rooted;
  if (s == "rejected") return Verdict::rejected;
  throw ParseError("unknown verdict '" + s + "'");
}

namespace {

void require_monic(const BiPoly& f, const char* what) {
  if (!f.is_monic_t()) throw DomainError(std::string(what) + ": polynomial not monic in T");
}

RejectionWitness sample_witness(const BiPoly& f, const Rational& x) {
  RejectionWitness w;
  w.x = x;
  UniPoly fx = f.eval_x(x);
  w.real_roots = count_distinct_real_roots(fx);
  w.distinct_roots = std::max(squarefree_part(fx).degree(), 0);
  return w;
}

RootCertificate rejected(RejectionWitness w) {
  RootCertificate c;
  c.verdict = Verdict::rejected;
  c.rejection = std::move(w);
  return c;
}

std::vector<int> leading_rows(int k) {
  std::vector<int> r(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) r[static_cast<std::size_t>(i)] = i;
  return r;
}

}  // namespace

RootCertificate certify_real_rooted(const BiPoly& f) {
  require_monic(f, "certify_real_rooted");
  if (!is_real_rooted(f.eval_x(0))) return rejected(sample_witness(f, 0));
  SymMatrixPoly h = hermite_matrix(f);
  std::vector<UniPoly> minors = principal_minors(h);
  RootCertificate cert;
  for (unsigned mask = 1; mask < minors.size(); ++mask) {
    if (auto x = find_negative_point(minors[mask])) {
      RejectionWitness w = sample_witness(f, *x);
      w.minor_rows = mask_to_rows(mask);
      w.minor = minors[mask];
      return rejected(std::move(w));
    }
    cert.minors.push_back({mask_to_rows(mask), minors[mask], "nonnegative"});
  }
  cert.verdict = Verdict::real_rooted;
  return cert;
}

RootCertificate certify_strictly_real_rooted(const BiPoly& f) {
  require_monic(f, "certify_strictly_real_rooted");
  if (!is_strictly_real_rooted(f.eval_x(0))) return rejected(sample_witness(f, 0));
  SymMatrixPoly h = hermite_matrix(f);
  std::vector<UniPoly> minors = leading_minors(h);
  RootCertificate cert;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    std::vector<int> rows = leading_rows(static_cast<int>(k) + 1);
    if (auto fail = check_positive(minors[k])) {
      RejectionWitness w;
      if (fail->x) {
        w = sample_witness(f, *fail->x);
      } else {
        w.x_interval = fail->zero;
      }
      w.minor_rows = rows;
      w.minor = minors[k];
      return rejected(std::move(w));
    }
    cert.minors.push_back({rows, minors[k], "positive"});
  }
  cert.verdict = Verdict::strictly_real_rooted;
  return cert;
}

bool verify_certificate(const BiPoly& f, const RootCertificate& cert) {
  if (!f.is_monic_t()) return false;
  const int d = f.degree_t();
  if (cert.verdict == Verdict::rejected) {
    if (!cert.rejection) return false;
    const RejectionWitness& w = *cert.rejection;
    if (w.x) {
      UniPoly fx = f.eval_x(*w.x);
      const int real = count_distinct_real_roots(fx);
      const int distinct = std::max(squarefree_part(fx).degree(), 0);
      if (real != w.real_roots || distinct != w.distinct_roots) return false;
      return real < distinct || distinct < d;
    }
    if (!w.x_interval || w.minor_rows.empty()) return false;
    SymMatrixPoly h = hermite_matrix(f);
    if (det_bareiss(h.submatrix(w.minor_rows, w.minor_rows)) != w.minor) return false;
    const RootInterval& iv = *w.x_interval;
    if (iv.exact()) return w.minor(iv.lo) == 0;
    UniPoly q = squarefree_part(w.minor);
    return q(iv.lo) != 0 && q(iv.hi) != 0 && sturm_count(q, iv.lo, iv.hi) >= 1;
  }
  SymMatrixPoly h = hermite_matrix(f);
  const bool strict = cert.verdict == Verdict::strictly_real_rooted;
  const std::size_t expected = strict ? static_cast<std::size_t>(d) : (std::size_t{1} << static_cast<unsigned>(d)) - 1;
  if (cert.minors.size() != expected) return false;
  std::vector<std::vector<int>> seen;
  for (const auto& ev : cert.minors) {
    if (det_bareiss(h.submatrix(ev.rows, ev.rows)) != ev.minor) return false;
    if (strict) {
      if (ev.property != "positive" || check_positive(ev.minor)) return false;
      if (ev.rows != leading_rows(static_cast<int>(ev.rows.size()))) return false;
    } else {
      if (ev.property != "nonnegative" || find_negative_point(ev.minor)) return false;
    }
    for (const auto& s : seen)
      if (s == ev.rows) return false;
    seen.push_back(ev.rows);
  }
  return true;
}

UniPoly roots_at_infinity(const BiPoly& f, int k, int d) {
  if (!grading_member(f, k, d)) throw DomainError("roots_at_infinity: polynomial outside the grading");
  if (!f.is_monic_t() || f.degree_t() != d) throw DomainError("roots_at_infinity: polynomial not monic of degree d");
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i).coeff(k * (d - i));
  return UniPoly(std::move(c));
}

namespace {

using KPoly = AlgField::Poly;

KPoly over_field(const BiPoly& g) { return g.t_coefficients(); }

// Does the primitive squarefree g (positive T-degree) have a singular point?
bool primitive_singular(const BiPoly& g) {
  BiPoly gt = g.d_t(), gx = g.d_x();
  if (gx.is_zero()) return false;
  UniPoly h = resultant_t(g, gt);
  if (!gx.is_zero()) {
    UniPoly r2 = resultant_t(g, gx);
    if (!r2.is_zero()) h = gcd(h, r2);
  }
  if (h.is_zero()) throw DomainError("smoothness_check: unexpected zero discriminant");
  if (h.degree() < 1) return false;
  for (const auto& [q, mult] : factor(h).factors) {
    AlgField k(q);
    KPoly c = k.gcd(k.gcd(over_field(g), over_field(gt)), over_field(gx));
    if (c.size() >= 2) return true;
  }
  return false;
}

}  // namespace

bool smoothness_check(const BiPoly& f) {
  if (f.is_zero()) throw DomainError("smoothness_check of the zero polynomial");
  BiPoly core = squarefree_part(f);
  UniPoly c = content_x(core);
  BiPoly g = primitive_part(core);
  if (c.degree() > 0) {
    if (g.degree_t() < 1) return true;
    // Along a vertical line c(x) = 0 the curve is singular wherever g meets it.
    UniPoly upper = c;
    for (int i = 1; i <= g.degree_t(); ++i) upper = gcd(upper, g.coeff(i));
    UniPoly clean = exact_div(upper, gcd(upper, g.coeff(0)));
    if (clean.degree() < c.degree()) return false;
  }
  if (g.degree_t() < 1) return true;
  return !primitive_singular(g);
}

}  // namespace hypdet
