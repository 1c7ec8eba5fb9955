#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypdet/bipoly.hpp"
#include "hypdet/upoly.hpp"

namespace hypdet {

// p = unit * prod factors[i].first ^ factors[i].second, factors monic,
// irreducible over Q and sorted.
struct UniFactorization {
  Rational unit;
  std::vector<std::pair<UniPoly, int>> factors;
};

// Complete factorization over Q (Zassenhaus). DomainError on zero input.
UniFactorization factor(const UniPoly& p);

// Irreducible factors over Q of a polynomial monic in T, each monic in T,
// with multiplicities; sorted. DomainError on non-monic input.
std::vector<std::pair<BiPoly, int>> factor_irreducible(const BiPoly& f);

bool is_irreducible(const BiPoly& f);

}  // namespace hypdet
