#include <gtest/gtest.h>

#include "hypdet/hermite.hpp"
#include "hypdet/real_roots.hpp"
#include "oracles/oracles.hpp"

using namespace hypdet;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

PolyMatrix constant_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  const int n = static_cast<int>(rows.size());
  PolyMatrix m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) m(i, j++) = UniPoly::constant(v);
    ++i;
  }
  return m;
}

}  // namespace

TEST(Hermite, CubicWithRootsMinusOneZeroOne) {
  EXPECT_EQ(hermite_matrix(T * T * T - T), constant_matrix({{3, 0, 2}, {0, 2, 0}, {2, 0, 2}}));
}

TEST(Hermite, Quadratics) {
  UniPoly a{1, 2, 3};
  PolyMatrix h = hermite_matrix(T * T - BiPoly::in_x(a));
  EXPECT_EQ(h(0, 0), UniPoly::constant(2));
  EXPECT_TRUE(h(0, 1).is_zero());
  EXPECT_EQ(h(1, 1), a * Rational(2));
  UniPoly p{0, 1}, q{5, 0, 1};
  PolyMatrix g = hermite_matrix(T * T + BiPoly::in_x(p) * T + BiPoly::in_x(q));
  EXPECT_EQ(g(0, 1), -p);
  EXPECT_EQ(g(1, 1), p * p - q * Rational(2));
}

TEST(Hermite, MatchesNewtonOracle) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    BiPoly f = oracle::rand_monic(rng, 1 + trial % 5, 2, 5);
    EXPECT_EQ(hermite_matrix(f), oracle::hermite(f));
  }
}

TEST(Hermite, PositiveDefiniteOnLine) {
  EXPECT_TRUE(pd_on_line(hermite_matrix(T * T - X * X - c(1))));
  EXPECT_FALSE(pd_on_line(hermite_matrix(T * T - X * X)));
  EXPECT_FALSE(pd_on_line(hermite_matrix(T * T + c(1))));
}

TEST(Hermite, DefinitenessMatchesStrictRealRootedness) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly f = oracle::rand_monic(rng, 2 + trial % 3, 2, 4);
    Rational x0 = oracle::rand_rational(rng, 5);
    bool pd = oracle::positive_definite(oracle::eval_at(hermite_matrix(f), x0));
    EXPECT_EQ(pd, oracle::strictly_real_rooted(f.eval_x(x0))) << f.to_string() << " at " << to_string(x0);
  }
}
