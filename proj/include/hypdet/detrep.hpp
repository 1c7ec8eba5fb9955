#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypdet/diagonalize.hpp"
#include "hypdet/error.hpp"
#include "hypdet/ideal.hpp"
#include "hypdet/tripoly.hpp"
#include "hypdet/witness.hpp"

namespace hypdet {

// Raised by two_squares when p takes a negative value at x.
class NegativeValue : public DomainError {
 public:
  NegativeValue(const std::string& what, Rational at) : DomainError(what), x(std::move(at)) {}
  Rational x;
};

struct TwoSquares {
  UniPoly s, t;  // exact mode: p = s^2 + t^2
  bool exact = true;
  std::vector<double> s_numeric, t_numeric;  // always filled
  double residual = 0;                       // max |coefficient| of p - s^2 - t^2
};

// Decomposes a polynomial that is nonnegative on R as a sum of two squares,
// exactly when its odd-multiplicity factors split over Q(i), otherwise
// numerically (if allowed). Throws NegativeValue or NotConstructive.
TwoSquares two_squares(const UniPoly& p, bool allow_numeric = true, double tolerance = 1e-10);

enum class RepKind { exact_symmetric, d_symmetric };
std::string to_string(RepKind k);

struct FactorProvenance {
  BiPoly factor;
  int multiplicity = 1;
  std::string method;  // trivial | two_squares | witness
  bool exact = true;
};

// f = det(T I - A). In exact mode matrix holds A (exact_symmetric) or M with
// D M = M^T D (d_symmetric). numeric holds D^{1/2} M D^{-1/2}.
struct Representation {
  RepKind kind = RepKind::exact_symmetric;
  bool exact = true;
  PolyMatrix matrix;
  std::vector<Rational> dvec;
  NumericPolyMatrix numeric;
  double residual = 0;
  std::vector<FactorProvenance> provenance;
};

struct RepresentOptions {
  std::optional<IdealWitness> hint;
  bool search = false;
  WitnessSearchOptions search_options;
  bool allow_numeric = true;
  double numeric_tolerance = 1e-10;
};

// Symmetric T-spectral determinantal representation of f in H_{k,d}.
// NotConstructive for an irreducible factor of degree >= 3 without a usable
// witness; VerificationError if a supplied witness is rejected.
Representation represent(const BiPoly& f, int k, int d, const RepresentOptions& opt = {});

// Exact (or, for numeric representations, tolerance) check of symmetry,
// det(T - A) = f and the entry degree law. Throws VerificationError for a
// non-symmetric exact matrix or a malformed representation.
bool verify_representation(const BiPoly& f, const Representation& rep, int k, int d, double tolerance = 1e-10);

// scale * det(X A + Y B + Z C) = F, with the pencil positive definite at e.
struct PencilRep {
  RatMatrix a, b, c;
  Point3 direction;
  Rational scale = 1;
  bool exact = true;
  // Row-major floating-point pencil, filled in both modes.
  int dim = 0;
  std::vector<double> numeric_a, numeric_b, numeric_c;
};

PencilRep hv_represent(const TriPoly& f, const Point3& e, const RepresentOptions& opt = {});
bool verify_pencil(const TriPoly& f, const PencilRep& p, double tolerance = 1e-10);

}  // namespace hypdet
