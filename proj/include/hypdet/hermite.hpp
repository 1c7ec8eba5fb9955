#pragma once

#include <vector>

#include "hypdet/bipoly.hpp"

namespace hypdet {

// Symmetric matrix over Q[X].
using SymMatrixPoly = PolyMatrix;

// Power sums p_0, ..., p_{count-1} of the roots of f (monic in T), as
// polynomials in X, by Newton's identities.
std::vector<UniPoly> power_sums(const BiPoly& f, int count);

// d x d matrix with entry (i, j) = p_{i+j}. DomainError unless f is monic in T.
SymMatrixPoly hermite_matrix(const BiPoly& f);

// Every leading principal minor is strictly positive on all of R.
bool pd_on_line(const SymMatrixPoly& h);

}  // namespace hypdet
