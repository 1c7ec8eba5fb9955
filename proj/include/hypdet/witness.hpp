#pragma once

#include <cstdint>
#include <optional>

#include "hypdet/diagonalize.hpp"
#include "hypdet/ideal.hpp"

namespace hypdet {

// Output of the trace-form pipeline for one irreducible factor.
struct WitnessBlock {
  OrthoResult ortho;
  // alpha in the orthogonal basis; D * m = m^T * D with D = ortho.lambda.
  DSymCertificate cert;
  // Set when every lambda_i / lambda_0 is a rational square.
  std::optional<PolyMatrix> symmetric;
};

// beta_gram -> orthogonal_basis -> positivity_check -> mult_alpha_matrix.
// Throws VerificationError (or WelldefinednessError) when the witness is
// rejected.
WitnessBlock witness_block(const IdealWitness& w);

struct WitnessSearchOptions {
  int degree_bound = -1;  // X-degree of the candidate coordinates; -1 means k*d
  int height = 1;         // integer coefficients in [-height, height]
  std::uint64_t seed = 0; // 0 keeps the natural order within a degree level
  long max_candidates = 2000000;
};

struct WitnessSearchResult {
  IdealWitness witness;
  long position = 0;  // global rank of the accepted candidate in the search order
  long tested = 0;
};

// Bounded search for a witness (S, u * f'(alpha)) with u a unit of
// S = Q[X, T]/(f): candidates u with polynomial coordinates in increasing
// degree. Returns the earliest accepted candidate.
std::optional<WitnessSearchResult> find_witness(const BiPoly& f, int k, const WitnessSearchOptions& opt = {});
// Single-threaded reference with the same result.
std::optional<WitnessSearchResult> find_witness_serial(const BiPoly& f, int k, const WitnessSearchOptions& opt = {});

}  // namespace hypdet
