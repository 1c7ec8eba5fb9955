#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypdet/bipoly.hpp"
#include "hypdet/error.hpp"

namespace hypdet {

// Polynomial in X, X^{-1} and T: (x exponent, t exponent) -> coefficient.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const BiPoly& f);

  static LaurentPoly monomial(const Rational& c, int x_exp, int t_exp);

  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int x_exp, int t_exp) const;
  // True iff no positive power of X occurs.
  bool in_inverse_x() const;
  // Substitutes X^{-1} = 0; requires in_inverse_x().
  UniPoly at_infinity() const;

  LaurentPoly d_t() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(int x_exp, int t_exp, const Rational& c);
  std::map<std::pair<int, int>, Rational> terms_;
};

// g + a * dg/dT
BiPoly apply_P(const BiPoly& g, const UniPoly& a);
UniPoly apply_P(const UniPoly& g, const Rational& a);
LaurentPoly apply_P(const LaurentPoly& g, const LaurentPoly& a);

// X^{-kd} g(X, X^k T). DomainError if deg_T g > d.
LaurentPoly apply_Q(const BiPoly& g, int k, int d);

struct StageRecord {
  std::string name;       // M1 .. M4
  std::string op;         // operator applied
  Rational epsilon;       // 0 when skipped
  bool skipped = false;
  int attempts = 0;       // candidates tried
  bool passed = false;
  std::map<std::string, bool> verdicts;
};

struct PerturbTranscript {
  BiPoly input, output;
  int k = 0, d = 0;
  Rational epsilon0;
  int budget = 0;
  std::vector<StageRecord> stages;
  Rational distance;
};

// Raised when a stage runs out of its halving budget.
class PerturbationFailed : public NotConstructive {
 public:
  PerturbationFailed(const std::string& what, PerturbTranscript t) : NotConstructive(what), transcript(std::move(t)) {}
  PerturbTranscript transcript;
};

// Maximum absolute coefficient difference.
Rational coefficient_distance(const BiPoly& a, const BiPoly& b);

// Stage predicates, cumulative (stage i includes all earlier ones).
std::map<std::string, bool> stage_verdicts(const BiPoly& g, int stage, int k, int d);
bool stage_holds(const BiPoly& g, int stage, int k, int d);

// Perturbs f in H_{k,d} to a smooth strictly real rooted polynomial of the
// same grading. Throws PerturbationFailed when a stage budget is exhausted.
std::pair<BiPoly, PerturbTranscript> smooth_approximate(const BiPoly& f, int k, int d,
                                                        const Rational& epsilon0 = Rational(1, 64), int budget = 20);

// Re-applies the recorded operators to the transcript input.
BiPoly replay(const PerturbTranscript& t);
// Replay reproduces the output and every stage verdict re-passes.
bool verify_transcript(const PerturbTranscript& t);

}  // namespace hypdet
