#include <gtest/gtest.h>

#include "hypdet/nuij.hpp"
#include "hypdet/real_roots.hpp"
#include "hypdet/sturm.hpp"
#include "oracles/oracles.hpp"

using namespace hypdet;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

// b^{-d} g(b T) for a rational b, computed coefficientwise.
UniPoly scale_oracle(const UniPoly& g, const Rational& b, int d) {
  std::vector<Rational> out;
  Rational bd = 1;
  for (int i = 0; i < d; ++i) bd *= b;
  Rational bi = 1;
  for (int i = 0; i <= g.degree(); ++i) {
    out.push_back(g.coeff(i) * bi / bd);
    bi *= b;
  }
  return UniPoly(std::move(out));
}

}  // namespace

TEST(Nuij, PExamples) {
  Rational e(1, 3);
  EXPECT_EQ(apply_P(UniPoly{1, -2, 1}, e), (UniPoly{1 - 2 * e, 2 * e - 2, 1}));
  UniPoly g{3, 1, 4, 1};
  EXPECT_EQ(apply_P(g, Rational(0)), g);
  EXPECT_EQ(apply_P(T * T, UniPoly{0, 1}), T * T + c(2) * X * T);
}

TEST(Nuij, QExamples) {
  EXPECT_EQ(apply_Q(T * T - X * X, 1, 2), LaurentPoly(T * T - c(1)));
  BiPoly g = T * T * T + X * T + c(2);
  EXPECT_EQ(apply_Q(g, 0, 3), LaurentPoly(g));
  LaurentPoly expected = LaurentPoly(T * T * T - T) + LaurentPoly::monomial(-1, -2, 1);
  EXPECT_EQ(apply_Q(T * T * T - (X * X + c(1)) * T, 1, 3), expected);
}

TEST(Nuij, MultiplicityReductionLaws) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<Rational, int>> roots;
    for (int i = 0; i < 1 + trial % 3; ++i) {
      Rational r = oracle::rand_rational(rng, 5);
      bool dup = false;
      for (auto& [s, m] : roots) dup = dup || s == r;
      if (!dup) roots.push_back({r, 1 + (trial + i) % 3});
    }
    UniPoly g = oracle::from_roots(roots);
    Rational eps = oracle::rand_rational(rng, 4);
    if (eps == 0) eps = Rational(1, 7);
    UniPoly p = apply_P(g, eps);
    EXPECT_TRUE(is_real_rooted(p));
    UniPoly planted = UniPoly::constant(1);
    for (const auto& [r, m] : roots) {
      EXPECT_EQ(oracle::multiplicity(p, r), m - 1);
      planted *= pow(UniPoly{-r, 1}, static_cast<unsigned>(m - 1));
    }
    UniPoly rest = p / planted;
    EXPECT_EQ(rest.degree(), static_cast<int>(roots.size()));
    EXPECT_TRUE(oracle::strictly_real_rooted(rest));
    for (const auto& [r, m] : roots) EXPECT_NE(rest(r), 0);
  }
}

TEST(Nuij, PCommutesWithRationalScaling) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + trial % 5;
    UniPoly g = oracle::rand_uni(rng, d, 6);
    Rational a = oracle::rand_rational(rng, 5), b = oracle::rand_rational(rng, 5);
    if (b == 0) b = 2;
    EXPECT_EQ(apply_P(scale_oracle(g, b, d), a), scale_oracle(apply_P(g, a * b), b, d));
  }
}

TEST(Nuij, PCommutesWithMonomialScaling) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + trial % 4, k = trial % 3;
    BiPoly g = oracle::rand_monic(rng, d, 2, 4);
    UniPoly a = oracle::rand_uni(rng, 1, 4);
    LaurentPoly lhs = apply_P(apply_Q(g, k, d), LaurentPoly(BiPoly::in_x(a)));
    LaurentPoly rhs = apply_Q(apply_P(g, a * UniPoly::monomial(1, k)), k, d);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Nuij, GradedImageLiesInInverseX) {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 4, k = 1 + trial % 2;
    std::vector<UniPoly> cs;
    for (int j = 0; j < d; ++j) cs.push_back(oracle::rand_uni(rng, k * (d - j), 3));
    cs.push_back(UniPoly::constant(1));
    EXPECT_TRUE(apply_Q(BiPoly(cs), k, d).in_inverse_x());
  }
}

TEST(Nuij, PipelineOnDegenerateInputs) {
  for (const BiPoly& f : {(T - X) * (T - X) * (T + X), T * T - X * X, T * T * T}) {
    const int d = f.degree_t();
    auto [g, t] = smooth_approximate(f, 1, d);
    for (int s = 1; s <= 4; ++s) EXPECT_TRUE(stage_holds(g, s, 1, d)) << f.to_string() << " stage " << s;
    EXPECT_TRUE(grading_member(g, 1, d));
    EXPECT_EQ(certify_strictly_real_rooted(g).verdict, Verdict::strictly_real_rooted);
    EXPECT_TRUE(smoothness_check(g));
    EXPECT_TRUE(verify_transcript(t));
    EXPECT_EQ(replay(t), g);
  }
}

TEST(Nuij, DistanceShrinksWithEpsilon) {
  for (const BiPoly& f : {(T - X) * (T - X) * (T + X), T * T - X * X, T * T * T}) {
    Rational last = -1;
    for (const Rational& e : {Rational(1, 4), Rational(1, 16), Rational(1, 64)}) {
      auto [g, t] = smooth_approximate(f, 1, f.degree_t(), e);
      if (last >= 0) EXPECT_LT(t.distance, last);
      last = t.distance;
    }
  }
}

TEST(Nuij, AlreadyGoodInputIsUntouched) {
  BiPoly f = T * T - X * X - c(1);
  auto [g, t] = smooth_approximate(f, 1, 2);
  EXPECT_EQ(g, f);
  for (const auto& s : t.stages) EXPECT_TRUE(s.skipped);
  EXPECT_EQ(t.distance, 0);
}

TEST(Nuij, TamperedTranscriptFails) {
  auto [g, t] = smooth_approximate(T * T - X * X, 1, 2);
  t.output = t.output + c(Rational(1, 1000));
  EXPECT_FALSE(verify_transcript(t));
}

TEST(Nuij, RejectsInputOutsideGrading) {
  EXPECT_THROW(smooth_approximate(T * T - X * X * X, 1, 2), DomainError);
}
