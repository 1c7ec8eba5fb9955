#include <gtest/gtest.h>

#include "hypdet/detrep.hpp"
#include "hypdet/real_roots.hpp"
#include "oracles/oracles.hpp"

using namespace hypdet;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

TriPoly var(int i) {
  Point3 p{0, 0, 0};
  p[static_cast<std::size_t>(i)] = 1;
  return TriPoly::linear(p);
}

// Equal up to simultaneous signed permutation of rows and columns.
bool signed_permutation_equal(const PolyMatrix& a, const PolyMatrix& b) {
  const int n = a.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          const int s = (((signs >> i) ^ (signs >> j)) & 1u) ? -1 : 1;
          ok = a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) * Rational(s) == b(i, j);
        }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

PolyMatrix mat(std::initializer_list<std::initializer_list<UniPoly>> rows) {
  const int n = static_cast<int>(rows.size());
  PolyMatrix m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

const UniPoly x{0, 1};
const UniPoly one = UniPoly::constant(1);

}  // namespace

TEST(TwoSquares, Examples) {
  auto a = two_squares(UniPoly{4, 0, 4});
  EXPECT_TRUE(a.exact);
  EXPECT_EQ(a.s, (UniPoly{0, 2}));
  EXPECT_EQ(a.t, UniPoly::constant(2));
  auto b = two_squares(UniPoly{1, 0, 2, 0, 1});
  EXPECT_EQ(b.s, (UniPoly{1, 0, 1}));
  EXPECT_TRUE(b.t.is_zero());
  auto c2 = two_squares(UniPoly::constant(2));
  EXPECT_EQ(c2.s, one);
  EXPECT_EQ(c2.t, one);
}

TEST(TwoSquares, RandomProductsOfSquares) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    UniPoly p = oracle::rand_uni(rng, 2, 5), q = oracle::rand_uni(rng, 2, 5);
    UniPoly target = p * p + q * q;
    if (target.is_zero()) continue;
    auto r = two_squares(target);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.s * r.s + r.t * r.t, target);
  }
}

TEST(TwoSquares, NegativeInput) {
  try {
    two_squares(UniPoly{-1, 0, 1});
    FAIL();
  } catch (const NegativeValue& e) {
    EXPECT_LT(UniPoly({-1, 0, 1})(e.x), 0);
  }
}

TEST(TwoSquares, NumericFallback) {
  auto r = two_squares(UniPoly::constant(3));
  EXPECT_FALSE(r.exact);
  EXPECT_LT(r.residual, 1e-12);
  EXPECT_THROW(two_squares(UniPoly::constant(3), false), NotConstructive);
}

TEST(Represent, Linear) {
  auto r = represent(T - BiPoly::in_x(UniPoly{1, 2}), 1, 1);
  EXPECT_EQ(r.matrix(0, 0), (UniPoly{1, 2}));
}

TEST(Represent, Conic) {
  auto r = represent(T * T - X * X - c(1), 1, 2);
  EXPECT_EQ(r.kind, RepKind::exact_symmetric);
  EXPECT_TRUE(signed_permutation_equal(r.matrix, mat({{x, one}, {one, -x}})));
}

TEST(Represent, ReducibleCubic) {
  BiPoly f = T * (T * T - X * X - c(1));
  auto r = represent(f, 1, 3);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(oracle::charpoly(r.matrix), f);
  EXPECT_TRUE(r.matrix(0, 0).is_zero());
  ASSERT_EQ(r.provenance.size(), 2u);
  EXPECT_EQ(r.provenance[0].method, "trivial");
  EXPECT_EQ(r.provenance[1].method, "two_squares");
}

TEST(Represent, RepeatedFactors) {
  BiPoly f = (T - X) * (T - X) * (T + X);
  auto r = represent(f, 1, 3);
  EXPECT_EQ(oracle::charpoly(r.matrix), f);
}

TEST(Represent, IrreducibleCubicNeedsWitness) {
  BiPoly f = T * T * T - X * X * T - c(2) * T + X;
  EXPECT_THROW(represent(f, 1, 3), NotConstructive);
  RepresentOptions opt;
  opt.search = true;
  auto r = represent(f, 1, 3, opt);
  EXPECT_TRUE(verify_representation(f, r, 1, 3));
  EXPECT_EQ(r.provenance[0].method, "witness");
}

TEST(Represent, NotRealRooted) { EXPECT_THROW(represent(T * T + X * X + c(1), 1, 2), DomainError); }

TEST(Represent, NumericQuadratic) {
  BiPoly f = T * T - c(Rational(3, 4));
  auto r = represent(f, 0, 2);
  EXPECT_FALSE(r.exact);
  EXPECT_TRUE(verify_representation(f, r, 0, 2));
}

TEST(Represent, DegreeLawOnRandomSpectra) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 1 + trial % 2;
    std::vector<UniPoly> lin;
    BiPoly f = c(1);
    for (int i = 0; i < 1 + trial % 3; ++i) f = f * (T - BiPoly::in_x(oracle::rand_uni(rng, k, 4)));
    PolyMatrix a = oracle::rand_symmetric(rng, 2, k, 3);
    f = f * char_poly(a);
    const int d = f.degree_t();
    ASSERT_TRUE(grading_member(f, k, d));
    auto r = represent(f, k, d);
    ASSERT_TRUE(r.exact);
    EXPECT_TRUE(verify_representation(f, r, k, d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) EXPECT_LE(r.matrix(i, j).degree(), k);
  }
}

TEST(Verify, Examples) {
  Representation rep;
  rep.matrix = mat({{x, one}, {one, -x}});
  EXPECT_TRUE(verify_representation(T * T - X * X - c(1), rep, 1, 2));
  EXPECT_FALSE(verify_representation(T * T - X * X, rep, 1, 2));
  rep.matrix = mat({{x, one}, {UniPoly(), -x}});
  EXPECT_THROW(verify_representation(T * T - X * X - c(1), rep, 1, 2), VerificationError);
}

TEST(Pencil, Cone) {
  TriPoly f = var(2) * var(2) - var(0) * var(0) - var(1) * var(1);
  auto p = hv_represent(f, {0, 0, 1});
  EXPECT_TRUE(p.exact);
  EXPECT_TRUE(verify_pencil(f, p));
  Matrix<TriPoly> l(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) l(i, j) = TriPoly::linear({p.a(i, j), p.b(i, j), p.c(i, j)});
  EXPECT_EQ(p.scale * oracle::det_leibniz(l), f);
  EXPECT_TRUE(oracle::positive_definite(p.c));
}

TEST(Pencil, ProductOfLinearForms) {
  TriPoly f = var(0) * var(1) * var(2);
  auto p = hv_represent(f, {1, 1, 1});
  EXPECT_TRUE(verify_pencil(f, p));
  EXPECT_TRUE(oracle::positive_definite(p.a + p.b + p.c));
}

TEST(Pencil, NotHyperbolic) {
  TriPoly f = var(0) * var(0) + var(1) * var(1) + var(2) * var(2);
  EXPECT_THROW(hv_represent(f, {0, 0, 1}), DomainError);
}

TEST(Pencil, RandomLinesHaveRealRoots) {
  TriPoly f = var(2) * var(2) - var(0) * var(0) - var(1) * var(1);
  auto p = hv_represent(f, {0, 0, 1});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Point3 a{oracle::rand_rational(rng, 5), oracle::rand_rational(rng, 5), oracle::rand_rational(rng, 5)};
    // det(L(a) - t L(e)) as a polynomial in t.
    PolyMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        m(i, j) = UniPoly{a[0] * p.a(i, j) + a[1] * p.b(i, j) + a[2] * p.c(i, j), -p.c(i, j)};
    UniPoly q = det_bareiss(m);
    EXPECT_EQ(oracle::distinct_real_roots(q) + (gcd(q, q.derivative()).degree() > 0 ? 1 : 0), q.degree());
  }
}
