// One PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hypdet/detrep.hpp"
#include "hypdet/hermite.hpp"
#include "hypdet/nuij.hpp"
#include "hypdet/quotient.hpp"
#include "hypdet/real_roots.hpp"
#include "hypdet/sturm.hpp"
#include "hypdet/witness.hpp"
#include "oracles/oracles.hpp"

using namespace hypdet;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

bool leading_minors_positive(const RatMatrix& m) {
  for (int k = 1; k <= m.rows(); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (det_bareiss(m.submatrix(idx, idx)) <= 0) return false;
  }
  return true;
}

Outcome trace_duality() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 20) {
    const int d = 1 + done % 6;
    BiPoly f = oracle::rand_monic(rng, d, 1, 10);
    if (discriminant_t(f).is_zero()) continue;
    ++done;
    auto m = make_modulus(f);
    auto beta = dual_basis(m);
    QuotElem al = QuotElem::one(m);
    for (int l = 0; l < d; ++l, al = al * QuotElem::alpha(m)) {
      for (int k = 0; k < d; ++k) {
        RatFunc s = sigma_form(al, beta[static_cast<std::size_t>(k)]);
        o.check(s == RatFunc(Rational(l == k ? 1 : 0)), "sigma(alpha^l, beta_k) != delta for " + f.to_string());
        std::vector<UniPoly> ua(static_cast<std::size_t>(l + 1)), ub;
        ua[static_cast<std::size_t>(l)] = UniPoly::constant(1);
        for (const auto& x : beta[static_cast<std::size_t>(k)].coords()) ub.push_back(x.as_polynomial());
        o.check(oracle::residue_pairing(ua, ub, f) == UniPoly::constant(l == k ? 1 : 0), "residue oracle disagrees");
      }
      o.check(sigma_form(al, QuotElem::one(m)) == RatFunc(Rational(l == d - 1 ? 1 : 0)), "sigma(alpha^l, 1) wrong");
    }
  }
  o.detail = o.pass ? "20 separable moduli, d <= 6" : o.detail;
  return o;
}

Outcome hermite_consistency() {
  Outcome o;
  PolyMatrix h = hermite_matrix(T * T * T - T);
  const int expect[3][3] = {{3, 0, 2}, {0, 2, 0}, {2, 0, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) o.check(h(i, j) == UniPoly::constant(expect[i][j]), "H(T^3-T) mismatch");
  std::mt19937_64 rng(7);
  int positive = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 3;
    BiPoly f = c(1);
    if (trial % 2 == 0) {
      for (int i = 0; i < d; ++i) f = f * (T - BiPoly::in_x(oracle::rand_uni(rng, 1, 3)));
    } else {
      f = oracle::rand_monic(rng, d, 2, 4);
    }
    Rational x0 = oracle::rand_rational(rng, 4);
    const bool pd = leading_minors_positive(oracle::eval_at(hermite_matrix(f), x0));
    const bool strict = is_strictly_real_rooted(f.eval_x(x0));
    o.check(pd == strict, "definiteness disagrees with Sturm for " + f.to_string() + " at " + to_string(x0));
    o.check(strict == oracle::strictly_real_rooted(f.eval_x(x0)), "Sturm disagrees with oracle chain");
    positive += pd;
  }
  if (o.pass) o.detail = "50 samples, " + std::to_string(positive) + " positive definite; H(T^3-T) exact";
  return o;
}

Outcome nuij_laws() {
  Outcome o;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<Rational, int>> roots;
    for (int i = 0; i < 1 + trial % 4; ++i) {
      Rational r = oracle::rand_rational(rng, 6);
      bool dup = false;
      for (auto& pr : roots) dup = dup || pr.first == r;
      if (!dup) roots.push_back({r, 1 + (trial + i) % 3});
    }
    UniPoly g = oracle::from_roots(roots);
    Rational eps = oracle::rand_rational(rng, 5);
    if (eps == 0) eps = Rational(-1, 3);
    UniPoly p = apply_P(g, eps);
    o.check(is_real_rooted(p), "P_eps g not real rooted");
    UniPoly planted = UniPoly::constant(1);
    for (const auto& [r, m] : roots) {
      o.check(oracle::multiplicity(p, r) == m - 1, "multiplicity did not drop by one");
      planted *= pow(UniPoly{-r, 1}, static_cast<unsigned>(m - 1));
    }
    UniPoly rest = p / planted;
    o.check(oracle::strictly_real_rooted(rest), "new multiple root appeared");
    for (const auto& pr : roots) o.check(rest(pr.first) != 0, "old root reappeared with higher multiplicity");
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 5, k = trial % 4;
    BiPoly g = oracle::rand_monic(rng, d, 3, 5);
    UniPoly a = oracle::rand_uni(rng, 2, 5);
    LaurentPoly lhs = apply_P(apply_Q(g, k, d), LaurentPoly(BiPoly::in_x(a)));
    LaurentPoly rhs = apply_Q(apply_P(g, a * UniPoly::monomial(1, k)), k, d);
    o.check(lhs == rhs, "P_a Q_{d,b} != Q_{d,b} P_{ab}");
  }
  if (o.pass) o.detail = "50 planted-multiplicity cases, 50 commutation cases";
  return o;
}

Outcome density_pipeline() {
  Outcome o;
  std::string dist;
  for (const BiPoly& f : {(T - X) * (T - X) * (T + X), T * T - X * X, T * T * T}) {
    const int d = f.degree_t();
    Rational last = -1;
    for (const Rational& e : {Rational(1, 4), Rational(1, 16), Rational(1, 64)}) {
      auto [g, t] = smooth_approximate(f, 1, d, e);
      for (int s = 1; s <= 4; ++s) o.check(stage_holds(g, s, 1, d), "stage predicate fails for " + f.to_string());
      o.check(grading_member(g, 1, d), "grading lost");
      o.check(verify_transcript(t), "transcript does not replay");
      if (last >= 0) o.check(t.distance < last, "distance not shrinking for " + f.to_string());
      last = t.distance;
      dist += to_string(t.distance) + " ";
    }
    dist += "| ";
  }
  if (o.pass) o.detail = "distances " + dist;
  return o;
}

Outcome degree_correspondence() {
  Outcome o;
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 5, k = trial % 4;
    PolyMatrix a = oracle::rand_symmetric(rng, d, k, 4);
    BiPoly f = char_poly(a);
    o.check(grading_member(f, k, d), "det(T-A) outside grading");
  }
  int reps = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    BiPoly f = c(1);
    for (int i = 0; i < 1 + trial % 3; ++i) f = f * (T - BiPoly::in_x(oracle::rand_uni(rng, k, 4)));
    f = f * char_poly(oracle::rand_symmetric(rng, 2, k, 3));
    const int d = f.degree_t();
    try {
      Representation r = represent(f, k, d);
      o.check(verify_representation(f, r, k, d), "representation fails verification");
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) o.check(r.matrix(i, j).degree() <= k, "entry degree exceeds k");
      ++reps;
    } catch (const Error& e) {
      o.check(false, std::string("represent failed: ") + e.what());
    }
  }
  if (o.pass) o.detail = "50 graded char polys, " + std::to_string(reps) + " representations with entry degree <= k";
  return o;
}

Outcome end_to_end() {
  Outcome o;
  Representation r = represent(T * T - X * X - c(1), 1, 2);
  const UniPoly x{0, 1};
  PolyMatrix target(2, 2);
  target(0, 0) = x;
  target(0, 1) = target(1, 0) = UniPoly::constant(1);
  target(1, 1) = -x;
  bool match = false;
  for (int swap = 0; swap < 2 && !match; ++swap)
    for (int sign = 0; sign < 2 && !match; ++sign) {
      bool ok = true;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          const int s = (i != j && sign) ? -1 : 1;
          ok = ok && r.matrix(swap ? 1 - i : i, swap ? 1 - j : j) * Rational(s) == target(i, j);
        }
      match = ok;
    }
  o.check(match, "conic representation differs from [[X,1],[1,-X]]");
  o.check(verify_representation(T * T - X * X - c(1), r, 1, 2), "conic does not verify");
  BiPoly g = T * (T * T - X * X - c(1));
  o.check(verify_representation(g, represent(g, 1, 3), 1, 3), "reducible cubic does not verify");
  Point3 e{0, 0, 1};
  TriPoly f = TriPoly::monomial(1, {0, 0, 2}) - TriPoly::monomial(1, {2, 0, 0}) - TriPoly::monomial(1, {0, 2, 0});
  PencilRep p = hv_represent(f, e);
  Matrix<TriPoly> l(p.dim, p.dim);
  for (int i = 0; i < p.dim; ++i)
    for (int j = 0; j < p.dim; ++j) l(i, j) = TriPoly::linear({p.a(i, j), p.b(i, j), p.c(i, j)});
  o.check(p.exact && p.scale * oracle::det_leibniz(l) == f, "pencil determinant identity fails");
  o.check(oracle::positive_definite(p.c), "pencil not definite at e");
  if (o.pass) o.detail = "conic, T(T^2-X^2-1), cone pencil all exact";
  return o;
}

// beta_gram -> orthogonal_basis -> positivity_check -> mult_alpha_matrix -> symmetrize
bool witness_chain(const BiPoly& f, const IdealWitness& w, Outcome& o) {
  GramForm g = beta_gram(w.basis, w.c);
  if (!g.unimodular) return false;
  OrthoResult r = orthogonal_basis(g.gram);
  if (!positivity_check(r)) return false;
  const int d = f.degree_t();
  std::vector<QuotElem> basis;
  for (int j = 0; j < d; ++j) {
    QuotElem q = QuotElem::zero(w.modulus);
    for (int i = 0; i < d; ++i) q = q + RatFunc(r.q(i, j)) * w.basis[static_cast<std::size_t>(i)];
    basis.push_back(q);
  }
  PolyMatrix m = mult_alpha_matrix(basis);
  auto [cert, numeric] = symmetrize(m, r.lambda);
  PolyMatrix dm = m, mtd = m.transpose();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      dm(i, j) = m(i, j) * r.lambda[static_cast<std::size_t>(i)];
      mtd(i, j) = mtd(i, j) * r.lambda[static_cast<std::size_t>(j)];
    }
  o.check(dm == mtd, "D M != M^T D for " + f.to_string());
  o.check(oracle::charpoly(m) == f, "det(T - M) != f for " + f.to_string());
  for (const auto& l : r.lambda) o.check(l > 0, "non-positive lambda");
  return true;
}

Outcome witness_pipeline() {
  Outcome o;
  std::string found;
  for (const BiPoly& f : {T * T - X * T - c(1), T * T - X * X - c(1), T * T + X * T - c(2), T * T * T - X * X * T - c(2) * T + X}) {
    o.check(certify_strictly_real_rooted(f).verdict == Verdict::strictly_real_rooted && smoothness_check(f),
            "example not smooth strictly real rooted: " + f.to_string());
    auto w = find_witness(f, 1);
    if (!w) {
      if (f.degree_t() >= 3) {
        found += "cubic NotConstructive; ";
        continue;
      }
      o.check(false, "no witness for quadratic " + f.to_string());
      continue;
    }
    o.check(verify_square(w->witness), "witness fails the square test");
    o.check(witness_chain(f, w->witness, o), "chain rejected witness for " + f.to_string());
    found += "d=" + std::to_string(f.degree_t()) + " at rank " + std::to_string(w->position) + "; ";
  }
  if (o.pass) o.detail = found;
  return o;
}

Outcome diagonalization() {
  Outcome o;
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 4;
    auto [g, detg] = oracle::rand_unimodular_form(rng, d, 1 + trial % 3);
    OrthoResult r = orthogonal_basis(g);
    PolyMatrix dq = r.q.transpose() * g * r.q;
    Rational prod = 1;
    for (int i = 0; i < d; ++i) {
      const Rational& l = r.lambda[static_cast<std::size_t>(i)];
      o.check(l != 0, "zero lambda");
      prod *= l;
      for (int j = 0; j < d; ++j) o.check(dq(i, j) == (i == j ? UniPoly::constant(l) : UniPoly()), "Q^T G Q not constant diagonal");
    }
    UniPoly dqd = det_bareiss(r.q);
    o.check(dqd.degree() == 0, "Q not unimodular");
    o.check(prod == detg * dqd.coeff(0) * dqd.coeff(0), "product law fails");
  }
  if (o.pass) o.detail = "30 forms, d <= 4, degrees <= 3";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "trace duality", 10, trace_duality},
      {2, "hermite consistency", 10, hermite_consistency},
      {3, "multiplicity reduction and scaling laws", 10, nuij_laws},
      {4, "density pipeline", 60, density_pipeline},
      {5, "degree correspondence", 20, degree_correspondence},
      {6, "end-to-end representations", 5, end_to_end},
      {7, "witness pipeline", 120, witness_pipeline},
      {8, "diagonalization", 30, diagonalization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.pass && secs < c.limit;
    if (!ok) ++failures;
    std::printf("criterion %d [%s]: %s  (%.2f s, limit %.0f s) %s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs, c.limit,
                o.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
