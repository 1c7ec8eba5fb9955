#include <gtest/gtest.h>

#include "hypdet/real_roots.hpp"
#include "hypdet/witness.hpp"
#include "oracles/oracles.hpp"

using namespace hypdet;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

void expect_valid_block(const BiPoly& f, const IdealWitness& w) {
  EXPECT_TRUE(verify_square(w));
  WitnessBlock b = witness_block(w);
  EXPECT_TRUE(check_dsym(b.cert));
  EXPECT_EQ(char_poly(b.cert.m), f);
  for (const auto& l : b.ortho.lambda) EXPECT_GT(l, 0);
  if (b.symmetric) {
    EXPECT_TRUE(b.symmetric->is_symmetric());
    EXPECT_EQ(oracle::charpoly(*b.symmetric), f);
  }
}

}  // namespace

TEST(WitnessSearch, Quadratics) {
  for (const BiPoly& f : {T * T - X * T - c(1), T * T - X * X - c(1)}) {
    auto r = find_witness(f, 1);
    ASSERT_TRUE(r.has_value()) << f.to_string();
    expect_valid_block(f, r->witness);
  }
}

TEST(WitnessSearch, IrreducibleCubic) {
  BiPoly f = T * T * T - X * X * T - c(2) * T + X;
  ASSERT_EQ(certify_strictly_real_rooted(f).verdict, Verdict::strictly_real_rooted);
  auto r = find_witness(f, 1);
  ASSERT_TRUE(r.has_value());
  expect_valid_block(f, r->witness);
}

TEST(WitnessSearch, ParallelMatchesSerial) {
  for (const BiPoly& f : {T * T - X * T - c(1), T * T * T - X * X * T - c(2) * T + X}) {
    for (std::uint64_t seed : {0ULL, 12345ULL}) {
      WitnessSearchOptions opt;
      opt.seed = seed;
      auto a = find_witness(f, 1, opt), b = find_witness_serial(f, 1, opt);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (!a) continue;
      EXPECT_EQ(a->position, b->position);
      EXPECT_EQ(a->witness.c, b->witness.c);
    }
  }
}

TEST(WitnessSearch, SeedsGiveValidWitnesses) {
  BiPoly f = T * T * T - X * X * T - c(2) * T + X;
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
    WitnessSearchOptions opt;
    opt.seed = seed;
    auto r = find_witness(f, 1, opt);
    ASSERT_TRUE(r.has_value());
    expect_valid_block(f, r->witness);
  }
}

TEST(WitnessSearch, BoundedSearchCanFail) {
  WitnessSearchOptions opt;
  opt.degree_bound = 0;
  opt.max_candidates = 50;
  EXPECT_FALSE(find_witness(T * T * T - X * X * T - c(2) * T + X, 1, opt).has_value());
}

TEST(WitnessBlock, RejectsNonSquare) {
  auto s = make_modulus(T * T - X * T - c(1));
  IdealWitness w{s, unit_ideal(s), QuotElem::one(s)};
  EXPECT_THROW(witness_block(w), VerificationError);
}
