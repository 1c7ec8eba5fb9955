#pragma once

#include <vector>

#include "hypdet/upoly.hpp"

namespace hypdet {

// Q^T G Q = diag(lambda), det Q a nonzero constant.
struct OrthoResult {
  PolyMatrix q;
  std::vector<Rational> lambda;
};

// Orthogonal basis of a unimodular symmetric form over Q[X] (columns of q).
// DomainError unless G is symmetric with a nonzero constant determinant.
OrthoResult orthogonal_basis(const PolyMatrix& g);

// All lambda_i > 0.
bool positivity_check(const OrthoResult& r);

// Square matrix of real polynomials (coefficients lowest degree first).
struct NumericPolyMatrix {
  int d = 0;
  std::vector<std::vector<double>> entries;  // row-major
  const std::vector<double>& at(int i, int j) const { return entries[static_cast<std::size_t>(i * d + j)]; }
};

// D M = M^T D with D positive diagonal.
struct DSymCertificate {
  PolyMatrix m;
  std::vector<Rational> d;
};

// Checks the certificate exactly (DomainError / VerificationError on
// failure) and returns it with A = D^{1/2} M D^{-1/2} in floating point.
std::pair<DSymCertificate, NumericPolyMatrix> symmetrize(const PolyMatrix& m, const std::vector<Rational>& d);

// D M == M^T D exactly and every D_i > 0.
bool check_dsym(const DSymCertificate& c);

NumericPolyMatrix to_numeric(const PolyMatrix& m);

}  // namespace hypdet
