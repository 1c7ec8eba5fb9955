#include <gtest/gtest.h>

#include "hypdet/quotient.hpp"
#include "oracles/oracles.hpp"

using namespace hypdet;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

RatFunc rf(const UniPoly& p) { return RatFunc(p, UniPoly::constant(1)); }

QuotElem elem(const ModulusPtr& m, std::vector<UniPoly> cs) {
  std::vector<RatFunc> r;
  for (auto& p : cs) r.push_back(rf(p));
  r.resize(static_cast<std::size_t>(m->degree()), rf(UniPoly()));
  return QuotElem(m, r);
}

std::vector<UniPoly> polys(const QuotElem& a) {
  std::vector<UniPoly> out;
  for (const auto& x : a.coords()) out.push_back(x.as_polynomial());
  return out;
}

BiPoly random_separable(std::mt19937_64& rng, int d) {
  for (;;) {
    BiPoly f = oracle::rand_monic(rng, d, 1, 10);
    if (!discriminant_t(f).is_zero()) return f;
  }
}

}  // namespace

TEST(Quotient, Multiplication) {
  auto i = make_modulus(T * T + c(1));
  auto a = QuotElem::alpha(i);
  EXPECT_EQ(a * a, elem(i, {UniPoly::constant(-1)}));
  auto one = QuotElem::one(i);
  EXPECT_EQ((one + a) * (one - a), elem(i, {UniPoly::constant(2)}));
  auto s = make_modulus(T * T - X);
  EXPECT_EQ(QuotElem::alpha(s) * QuotElem::alpha(s), elem(s, {UniPoly{0, 1}}));
}

TEST(Quotient, Trace) {
  auto m3 = make_modulus(T * T * T - T);
  EXPECT_EQ(trace(QuotElem::one(m3)), rf(UniPoly::constant(3)));
  EXPECT_EQ(trace(pow(QuotElem::alpha(m3), 2)), rf(UniPoly::constant(2)));
  auto s = make_modulus(T * T - X);
  EXPECT_TRUE(trace(QuotElem::alpha(s)).is_zero());
}

TEST(Quotient, SigmaExamples) {
  auto s = make_modulus(T * T - X);
  auto one = QuotElem::one(s), a = QuotElem::alpha(s);
  EXPECT_TRUE(sigma_form(one, one).is_zero());
  EXPECT_EQ(sigma_form(one, a), rf(UniPoly::constant(1)));
  auto m3 = make_modulus(T * T * T - T);
  EXPECT_EQ(sigma_form(QuotElem::alpha(m3), QuotElem::alpha(m3)), rf(UniPoly::constant(1)));
}

TEST(Quotient, DualBasisExamples) {
  auto q = make_modulus(T * T - c(5));
  auto b = dual_basis(q);
  EXPECT_EQ(b[0], QuotElem::alpha(q));
  EXPECT_EQ(b[1], QuotElem::one(q));
  UniPoly p{1, 2};
  auto g = make_modulus(T * T + BiPoly::in_x(p) * T + c(7));
  auto bg = dual_basis(g);
  EXPECT_EQ(bg[0], QuotElem::alpha(g) + elem(g, {p}));
  auto m3 = make_modulus(T * T * T - T);
  auto b3 = dual_basis(m3);
  EXPECT_EQ(b3[0], elem(m3, {UniPoly::constant(-1), UniPoly(), UniPoly::constant(1)}));
  EXPECT_EQ(b3[1], QuotElem::alpha(m3));
  EXPECT_EQ(b3[2], QuotElem::one(m3));
}

TEST(Quotient, SigmaMatchesResidueOracle) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 15; ++trial) {
    BiPoly f = random_separable(rng, 2 + trial % 4);
    auto m = make_modulus(f);
    const int d = f.degree_t();
    std::vector<UniPoly> ua, ub;
    for (int i = 0; i < d; ++i) {
      ua.push_back(oracle::rand_uni(rng, 1, 3));
      ub.push_back(oracle::rand_uni(rng, 1, 3));
    }
    EXPECT_EQ(sigma_form(elem(m, ua), elem(m, ub)), rf(oracle::residue_pairing(ua, ub, f)));
  }
}

TEST(Quotient, DualityAgainstResidueOracle) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    BiPoly f = random_separable(rng, 1 + trial % 6);
    auto m = make_modulus(f);
    const int d = f.degree_t();
    auto beta = dual_basis(m);
    for (int l = 0; l < d; ++l) {
      std::vector<UniPoly> al(static_cast<std::size_t>(l + 1));
      al[static_cast<std::size_t>(l)] = UniPoly::constant(1);
      for (int k = 0; k < d; ++k)
        EXPECT_EQ(oracle::residue_pairing(al, polys(beta[static_cast<std::size_t>(k)]), f), UniPoly::constant(l == k ? 1 : 0));
      EXPECT_EQ(oracle::residue_pairing(al, {UniPoly::constant(1)}, f), UniPoly::constant(l == d - 1 ? 1 : 0));
    }
  }
}

TEST(Quotient, GramExamples) {
  auto s = make_modulus(T * T - X);
  std::vector<QuotElem> basis{QuotElem::one(s), QuotElem::alpha(s)};
  auto g = beta_gram(basis, derivative_at_alpha(s));
  EXPECT_TRUE(g.unimodular);
  EXPECT_TRUE(g.gram(0, 0).is_zero());
  EXPECT_EQ(g.gram(0, 1), UniPoly::constant(1));

  auto q = make_modulus(T * T - X * T + c(1));
  auto gq = beta_gram({QuotElem::one(q), QuotElem::alpha(q)}, derivative_at_alpha(q));
  EXPECT_TRUE(gq.unimodular);
  EXPECT_EQ(gq.gram(1, 1), (UniPoly{0, 1}));

  auto h = beta_gram(basis, QuotElem::one(s));
  EXPECT_FALSE(h.unimodular);
  EXPECT_EQ(h.gram(0, 0), UniPoly::constant(2));
  EXPECT_EQ(h.gram(1, 1), (UniPoly{0, 2}));
}

TEST(Quotient, GramRejectsNonPolynomialEntries) {
  auto s = make_modulus(T * T - X);
  std::vector<QuotElem> basis{QuotElem::one(s), QuotElem::alpha(s)};
  EXPECT_THROW(beta_gram(basis, elem(s, {UniPoly{0, 1}})), WelldefinednessError);
}
