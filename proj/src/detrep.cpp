#include "hypdet/detrep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hypdet/algfield.hpp"
#include "hypdet/factor.hpp"
#include "hypdet/real_roots.hpp"
#include "hypdet/sturm.hpp"

namespace hypdet {

std::string to_string(RepKind k) { return k == RepKind::exact_symmetric ? "exact_symmetric" : "d_symmetric"; }

namespace {

using Complex = std::complex<double>;
using CPoly = std::vector<Complex>;
using KPoly = AlgField::Poly;

const AlgField& gaussian_field() {
  static const AlgField k(UniPoly{1, 0, 1});
  return k;
}

KPoly lift(const UniPoly& p) {
  KPoly r;
  for (const auto& c : p.coefficients()) r.push_back(UniPoly::constant(c));
  return r;
}

// p(X + s*i) over Q(i).
KPoly shifted(const KPoly& p, const Rational& s) {
  const AlgField& k = gaussian_field();
  KPoly lin{UniPoly{0, s}, UniPoly::constant(1)};
  KPoly acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = k.mul(acc, lin);
    if (acc.empty()) acc.resize(1);
    acc[0] += *it;
    acc = k.reduce(acc);
  }
  return acc;
}

KPoly conjugate(const KPoly& p) {
  KPoly r;
  for (const auto& c : p) r.push_back(UniPoly{c.coeff(0), -c.coeff(1)});
  return gaussian_field().reduce(r);
}

// Factor gamma of an irreducible g without real roots with g = gamma * conj(gamma).
std::optional<KPoly> split_gaussian(const UniPoly& g) {
  if (g.degree() % 2 != 0) return std::nullopt;
  const AlgField& k = gaussian_field();
  const KPoly gk = lift(g);
  for (int s = 0; s <= 32; ++s) {
    KPoly n = k.mul(shifted(gk, s), shifted(gk, -s));
    std::vector<Rational> real;
    for (const auto& c : n) real.push_back(c.coeff(0));
    UniPoly nr(std::move(real));
    if (gcd(nr, nr.derivative()).degree() > 0) continue;
    UniFactorization fac = factor(nr);
    if (fac.factors.size() < 2) return std::nullopt;
    KPoly gamma = k.gcd(gk, shifted(lift(fac.factors.front().first), -s));
    if (static_cast<int>(gamma.size()) - 1 != g.degree() / 2) return std::nullopt;
    if (k.mul(gamma, conjugate(gamma)) != gk) return std::nullopt;
    return gamma;
  }
  return std::nullopt;
}

// u = a^2 + b^2 with rationals a, b, by bounded search.
std::optional<std::pair<Rational, Rational>> rational_two_squares(const Rational& u) {
  Integer n = u.get_num() * u.get_den();
  const Integer den = u.get_den();
  long iterations = 0;
  for (Integer b = 0; 2 * b * b <= n && iterations < 10000000; ++b, ++iterations) {
    Integer r = n - b * b;
    Integer a = sqrt(r);
    if (a * a == r) return std::make_pair(make_rational(a, den), make_rational(b, den));
  }
  return std::nullopt;
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Complex ceval(const CPoly& p, Complex x) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Durand-Kerner roots of a squarefree real polynomial.
std::vector<Complex> complex_roots(const UniPoly& p) {
  UniPoly m = p.monic();
  CPoly c;
  for (const auto& x : m.coefficients()) c.emplace_back(x.get_d(), 0.0);
  const int n = m.degree();
  std::vector<Complex> z(static_cast<std::size_t>(n));
  double radius = 1;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1 + std::abs(c[static_cast<std::size_t>(i)]));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::polar(radius * 0.9, 0.4 + 2 * M_PI * i / n);
  for (int iter = 0; iter < 5000; ++iter) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      Complex den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      Complex step = ceval(c, z[static_cast<std::size_t>(i)]) / den;
      z[static_cast<std::size_t>(i)] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15) break;
  }
  return z;
}

CPoly to_cpoly(const KPoly& p) {
  CPoly r;
  for (const auto& c : p) r.emplace_back(c.coeff(0).get_d(), c.coeff(1).get_d());
  return r;
}

void normalize_sign(UniPoly& p) {
  if (!p.is_zero() && p.leading() < 0) p = -p;
}

}  // namespace

TwoSquares two_squares(const UniPoly& p, bool allow_numeric, double tolerance) {
  TwoSquares out;
  if (p.is_zero()) return out;
  if (auto x = find_negative_point(p)) throw NegativeValue("two_squares: polynomial is negative at x = " + to_string(*x), *x);
  UniFactorization fac = factor(p);
  const AlgField& k = gaussian_field();
  UniPoly real_part = UniPoly::constant(1);
  KPoly gamma{UniPoly::constant(1)};
  std::vector<std::pair<UniPoly, int>> unsplit;
  for (const auto& [g, m] : fac.factors) {
    real_part *= pow(g, static_cast<unsigned>(m / 2));
    if (m % 2 == 0) continue;
    if (auto gm = split_gaussian(g)) gamma = k.mul(gamma, *gm);
    else unsplit.emplace_back(g, 1);
  }
  auto unit = rational_two_squares(fac.unit);
  if (unsplit.empty() && unit) {
    KPoly ab{UniPoly{unit->first, unit->second}};
    KPoly full = k.mul(k.mul(ab, lift(real_part)), gamma);
    std::vector<Rational> s, t;
    for (const auto& c : full) {
      s.push_back(c.coeff(0));
      t.push_back(c.coeff(1));
    }
    out.s = UniPoly(std::move(s));
    out.t = UniPoly(std::move(t));
    normalize_sign(out.s);
    normalize_sign(out.t);
    if (out.s * out.s + out.t * out.t != p) throw VerificationError("two_squares: exact decomposition failed to verify");
    out.s_numeric = out.s.to_double();
    out.t_numeric = out.t.to_double();
    return out;
  }
  if (!allow_numeric) throw NotConstructive("two_squares: no exact decomposition over Q(i) found");
  CPoly q = cmul(to_cpoly(gamma), to_cpoly(lift(real_part)));
  for (auto& c : q) c *= std::sqrt(fac.unit.get_d());
  for (const auto& [g, m] : unsplit) {
    CPoly half{Complex(1, 0)};
    for (const auto& r : complex_roots(g))
      if (r.imag() > 0) half = cmul(half, CPoly{-r, Complex(1, 0)});
    q = cmul(q, half);
  }
  out.exact = false;
  for (const auto& c : q) {
    out.s_numeric.push_back(c.real());
    out.t_numeric.push_back(c.imag());
  }
  std::vector<double> target = p.to_double();
  double scale = 1;
  for (double c : target) scale = std::max(scale, std::abs(c));
  std::vector<double> sum(target.size() + 2 * q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      sum[i + j] += out.s_numeric[i] * out.s_numeric[j] + out.t_numeric[i] * out.t_numeric[j];
  for (std::size_t i = 0; i < sum.size(); ++i) {
    double ref = i < target.size() ? target[i] : 0.0;
    out.residual = std::max(out.residual, std::abs(sum[i] - ref));
  }
  if (out.residual > tolerance * scale) throw NotConstructive("two_squares: numeric decomposition exceeds tolerance");
  return out;
}

namespace {

struct Block {
  bool exact = true;
  bool symmetric = true;
  PolyMatrix m;
  std::vector<Rational> d;
  NumericPolyMatrix numeric;
  FactorProvenance prov;
};

NumericPolyMatrix scaled_numeric(const PolyMatrix& m, const std::vector<Rational>& d) {
  NumericPolyMatrix a = to_numeric(m);
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) {
      const double s = std::sqrt(d[static_cast<std::size_t>(i)].get_d() / d[static_cast<std::size_t>(j)].get_d());
      for (auto& x : a.entries[static_cast<std::size_t>(i * a.d + j)]) x *= s;
    }
  return a;
}

Block quadratic_block(const BiPoly& g, const RepresentOptions& opt) {
  const UniPoly& p = g.coeff(1);
  const UniPoly& q = g.coeff(0);
  UniPoly disc = p * p - q * Rational(4);
  TwoSquares ts = two_squares(disc, opt.allow_numeric, opt.numeric_tolerance);
  Block b;
  b.prov.method = "two_squares";
  b.d = {1, 1};
  if (ts.exact) {
    b.m = PolyMatrix(2, 2);
    b.m(0, 0) = (ts.s - p) * Rational(1, 2);
    b.m(1, 1) = (-p - ts.s) * Rational(1, 2);
    b.m(0, 1) = ts.t * Rational(1, 2);
    b.m(1, 0) = b.m(0, 1);
    b.numeric = to_numeric(b.m);
    return b;
  }
  b.exact = false;
  b.prov.exact = false;
  std::vector<double> pn = p.to_double();
  auto combine = [](const std::vector<double>& x, double cx, const std::vector<double>& y, double cy) {
    std::vector<double> r(std::max(x.size(), y.size()), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += cx * x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += cy * y[i];
    return r;
  };
  b.numeric.d = 2;
  b.numeric.entries = {combine(ts.s_numeric, 0.5, pn, -0.5), combine(ts.t_numeric, 0.5, {}, 0),
                       combine(ts.t_numeric, 0.5, {}, 0), combine(ts.s_numeric, -0.5, pn, -0.5)};
  return b;
}

Block witness_factor_block(const BiPoly& g, int k, const RepresentOptions& opt) {
  std::optional<IdealWitness> w;
  if (opt.hint && opt.hint->modulus && opt.hint->modulus->poly() == g) w = opt.hint;
  if (!w && opt.search) {
    if (auto found = find_witness(g, std::max(k, 1), opt.search_options)) w = found->witness;
  }
  if (!w)
    throw NotConstructive("irreducible factor " + g.to_string() + " of degree " + std::to_string(g.degree_t()) +
                          " needs an ideal witness (none supplied or found)");
  WitnessBlock wb = witness_block(*w);
  Block b;
  b.prov.method = "witness";
  if (wb.symmetric) {
    b.m = *wb.symmetric;
    b.d.assign(static_cast<std::size_t>(b.m.rows()), Rational(1));
    b.numeric = to_numeric(b.m);
  } else {
    b.symmetric = false;
    b.m = wb.cert.m;
    b.d = wb.cert.d;
    b.numeric = scaled_numeric(b.m, b.d);
  }
  return b;
}

}  // namespace

Representation represent(const BiPoly& f, int k, int d, const RepresentOptions& opt) {
  if (!f.is_monic_t() || f.degree_t() != d) throw DomainError("represent: polynomial not monic of degree d in T");
  if (!grading_member(f, k, d)) throw DomainError("represent: polynomial outside the grading");
  const auto factors = factor_irreducible(f);
  for (const auto& [g, mult] : factors)
    if (g.degree_t() > 1 && certify_real_rooted(g).verdict != Verdict::real_rooted)
      throw DomainError("represent: polynomial is not real rooted (factor " + g.to_string() + ")");

  std::vector<Block> blocks;
  for (const auto& [g, mult] : factors) {
    Block b;
    const int e = g.degree_t();
    if (e == 1) {
      b.m = PolyMatrix(1, 1);
      b.m(0, 0) = -g.coeff(0);
      b.d = {1};
      b.numeric = to_numeric(b.m);
      b.prov.method = "trivial";
    } else if (e == 2) {
      b = quadratic_block(g, opt);
    } else {
      b = witness_factor_block(g, k, opt);
    }
    b.prov.factor = g;
    b.prov.multiplicity = mult;
    for (int i = 0; i < mult; ++i) blocks.push_back(b);
  }

  Representation rep;
  rep.exact = std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.exact; });
  const bool symmetric = std::all_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.symmetric; });
  rep.kind = symmetric ? RepKind::exact_symmetric : RepKind::d_symmetric;
  rep.numeric.d = d;
  rep.numeric.entries.assign(static_cast<std::size_t>(d * d), {});
  if (rep.exact) rep.matrix = PolyMatrix(d, d);
  int offset = 0;
  for (const auto& b : blocks) {
    const int n = b.numeric.d;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        rep.numeric.entries[static_cast<std::size_t>((offset + i) * d + offset + j)] = b.numeric.at(i, j);
        if (rep.exact) rep.matrix(offset + i, offset + j) = b.m(i, j);
      }
    if (rep.exact && !symmetric) rep.dvec.insert(rep.dvec.end(), b.d.begin(), b.d.end());
    offset += n;
  }
  std::vector<FactorProvenance> seen;
  for (const auto& b : blocks)
    if (seen.empty() || seen.back().factor != b.prov.factor) seen.push_back(b.prov);
  rep.provenance = std::move(seen);
  if (!verify_representation(f, rep, k, d, opt.numeric_tolerance))
    throw VerificationError("represent: assembled representation failed verification");
  return rep;
}

namespace {

double eval_numeric(const std::vector<double>& p, double x) {
  double acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int numeric_degree(const std::vector<double>& p, double tol) {
  int deg = -1;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (std::abs(p[i]) > tol) deg = static_cast<int>(i);
  return deg;
}

}  // namespace

bool verify_representation(const BiPoly& f, const Representation& rep, int k, int d, double tolerance) {
  const bool graded = grading_member(f, k, d);
  if (rep.exact) {
    const PolyMatrix& m = rep.matrix;
    if (!m.square() || m.rows() != f.degree_t()) throw VerificationError("representation: malformed matrix");
    if (rep.kind == RepKind::exact_symmetric) {
      if (!m.is_symmetric()) throw VerificationError("representation: matrix is not symmetric");
    } else if (!check_dsym({m, rep.dvec})) {
      throw VerificationError("representation: D*M differs from M^T*D");
    }
    if (char_poly(m) != f) return false;
    if (graded)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          if (m(i, j).degree() > k) return false;
    return true;
  }
  const NumericPolyMatrix& a = rep.numeric;
  if (a.d != f.degree_t() || static_cast<int>(a.entries.size()) != a.d * a.d)
    throw VerificationError("representation: malformed numeric matrix");
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) {
      const auto& x = a.at(i, j);
      const auto& y = a.at(j, i);
      for (std::size_t t = 0; t < std::max(x.size(), y.size()); ++t) {
        double xv = t < x.size() ? x[t] : 0.0, yv = t < y.size() ? y[t] : 0.0;
        if (std::abs(xv - yv) > tolerance * (1 + std::abs(xv))) throw VerificationError("representation: numeric matrix is not symmetric");
      }
      if (graded && numeric_degree(a.at(i, j), 1e-9) > k) return false;
    }
  for (const double x : {-2.0, -1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    Matrix<double> ax(a.d, a.d);
    for (int i = 0; i < a.d; ++i)
      for (int j = 0; j < a.d; ++j) ax(i, j) = eval_numeric(a.at(i, j), x);
    std::vector<double> cp = charpoly_berkowitz(ax);
    double scale = 1;
    for (int i = 0; i <= a.d; ++i) scale = std::max(scale, std::abs(f.coeff(i).eval(x)));
    for (int i = 0; i <= a.d; ++i)
      if (std::abs(cp[static_cast<std::size_t>(i)] - f.coeff(i).eval(x)) > tolerance * 100 * scale) return false;
  }
  return true;
}

namespace {

RatMatrix coefficient_matrix(const PolyMatrix& m, int power) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).coeff(power);
  return r;
}

RatMatrix scaled(const RatMatrix& m, const Rational& c) {
  return m.map([&](const Rational& x) { return Rational(x * c); });
}

std::vector<double> flatten(const Matrix<double>& m) {
  std::vector<double> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

PencilRep hv_represent(const TriPoly& f, const Point3& e, const RepresentOptions& opt) {
  if (!is_hyperbolic(f, e)) throw DomainError("hv_represent: form is not hyperbolic with respect to e");
  const int d = f.degree();
  const Rational fe = f(e);
  RatMatrix frame = frame_for_direction(e);
  TriPoly g = (1 / fe) * f.substitute(frame);
  Representation rep = represent(g.chart_y(), 1, d, opt);
  RatMatrix r = *inverse(frame);

  PencilRep out;
  out.direction = e;
  out.dim = d;
  if (rep.exact) {
    std::vector<Rational> dv = rep.kind == RepKind::d_symmetric ? rep.dvec : std::vector<Rational>(static_cast<std::size_t>(d), 1);
    RatMatrix s0(d, d);
    Rational det_d = 1;
    for (int i = 0; i < d; ++i) {
      s0(i, i) = dv[static_cast<std::size_t>(i)];
      det_d *= dv[static_cast<std::size_t>(i)];
    }
    RatMatrix s1 = scaled(s0 * coefficient_matrix(rep.matrix, 1), -1);
    RatMatrix s2 = scaled(s0 * coefficient_matrix(rep.matrix, 0), -1);
    RatMatrix* targets[3] = {&out.a, &out.b, &out.c};
    for (int k = 0; k < 3; ++k)
      *targets[k] = scaled(s0, r(2, k)) + scaled(s1, r(0, k)) + scaled(s2, r(1, k));
    out.scale = fe / det_d;
    out.exact = true;
    auto to_d = [](const RatMatrix& m) { return flatten(m.map([](const Rational& x) { return x.get_d(); })); };
    out.numeric_a = to_d(out.a);
    out.numeric_b = to_d(out.b);
    out.numeric_c = to_d(out.c);
  } else {
    out.exact = false;
    out.scale = fe;
    std::vector<double>* targets[3] = {&out.numeric_a, &out.numeric_b, &out.numeric_c};
    for (int k = 0; k < 3; ++k) {
      Matrix<double> m(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const auto& entry = rep.numeric.at(i, j);
          const double b1 = entry.size() > 1 ? entry[1] : 0.0;
          const double c0 = entry.empty() ? 0.0 : entry[0];
          m(i, j) = (i == j ? r(2, k).get_d() : 0.0) - r(0, k).get_d() * b1 - r(1, k).get_d() * c0;
        }
      *targets[k] = flatten(m);
    }
  }
  if (!verify_pencil(f, out, opt.numeric_tolerance)) throw VerificationError("hv_represent: pencil failed verification");
  return out;
}

bool verify_pencil(const TriPoly& f, const PencilRep& p, double tolerance) {
  const int d = p.dim;
  if (d != f.degree()) return false;
  if (p.exact) {
    if (!p.a.is_symmetric() || !p.b.is_symmetric() || !p.c.is_symmetric()) return false;
    Matrix<TriPoly> l(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) l(i, j) = TriPoly::linear({p.a(i, j), p.b(i, j), p.c(i, j)});
    if (p.scale * det_laplace(l) != f) return false;
    RatMatrix at_e = scaled(p.a, p.direction[0]) + scaled(p.b, p.direction[1]) + scaled(p.c, p.direction[2]);
    for (int k = 1; k <= d; ++k) {
      std::vector<int> idx(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
      if (det_bareiss(at_e.submatrix(idx, idx)) <= 0) return false;
    }
    return true;
  }
  const double pts[][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 3}, {-1, 0.5, 2}, {0.3, -0.7, 1.1}, {2, -1, -1}};
  auto at = [&](const double* v) {
    Matrix<double> m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const auto ix = static_cast<std::size_t>(i * d + j);
        m(i, j) = v[0] * p.numeric_a[ix] + v[1] * p.numeric_b[ix] + v[2] * p.numeric_c[ix];
      }
    return m;
  };
  for (const auto& v : pts) {
    double fv = f({Rational(v[0]), Rational(v[1]), Rational(v[2])}).get_d();
    double dv = p.scale.get_d() * det_bareiss(at(v));
    if (std::abs(fv - dv) > tolerance * 100 * (1 + std::abs(fv))) return false;
  }
  const double ev[3] = {p.direction[0].get_d(), p.direction[1].get_d(), p.direction[2].get_d()};
  Matrix<double> me = at(ev);
  for (int k = 1; k <= d; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (det_bareiss(me.submatrix(idx, idx)) <= 0) return false;
  }
  return true;
}

}  // namespace hypdet
