#pragma once

#include <vector>

#include "hypdet/quotient.hpp"

namespace hypdet {

// Q[X]-basis of a fractional ideal I of S = Q[X, T]/(f) together with
// c in L, as used in the witness equation I^2 = (c / f'(alpha)).
struct IdealWitness {
  ModulusPtr modulus;
  std::vector<QuotElem> basis;
  QuotElem c;
};

// Canonical basis of the Q[X]-module generated by gens: common monic
// denominator, numerators in Hermite normal form (upper triangular, monic
// pivots, entries above a pivot reduced modulo it). DomainError if the
// rank is below d.
std::vector<QuotElem> module_canonical(const std::vector<QuotElem>& gens);

bool same_module(const std::vector<QuotElem>& a, const std::vector<QuotElem>& b);

// Q[X]-basis of g*S.
std::vector<QuotElem> principal_ideal(const QuotElem& g);
// Standard basis 1, alpha, ..., alpha^{d-1} of S.
std::vector<QuotElem> unit_ideal(const ModulusPtr& m);

std::vector<QuotElem> ideal_mul(const std::vector<QuotElem>& a, const std::vector<QuotElem>& b);

// I * I == (c / f'(alpha)). DomainError if f is not separable.
bool verify_square(const IdealWitness& w);

// M with alpha * b_j = sum_i M_ij b_i. DomainError if alpha * I is not
// contained in I.
PolyMatrix mult_alpha_matrix(const std::vector<QuotElem>& basis);

}  // namespace hypdet
