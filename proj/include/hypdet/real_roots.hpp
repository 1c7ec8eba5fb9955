#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypdet/bipoly.hpp"
#include "hypdet/sturm.hpp"

namespace hypdet {

enum class Verdict { real_rooted, strictly_real_rooted, rejected };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

// A principal minor of the Hermite matrix with the property it satisfies on
// all of R ("nonnegative" or "positive").
struct MinorEvidence {
  std::vector<int> rows;
  UniPoly minor;
  std::string property;
};

struct RejectionWitness {
  // Rational sample where f(x, T) fails, or an isolating interval of an
  // irrational point where a leading minor vanishes.
  std::optional<Rational> x;
  std::optional<RootInterval> x_interval;
  // Distinct real roots of f(x, T) and its number of distinct complex roots.
  int real_roots = -1;
  int distinct_roots = -1;
  std::vector<int> minor_rows;
  UniPoly minor;
};

struct RootCertificate {
  Verdict verdict = Verdict::rejected;
  std::vector<MinorEvidence> minors;
  std::optional<RejectionWitness> rejection;
};

// PSD of the Hermite matrix everywhere, through all principal minors.
RootCertificate certify_real_rooted(const BiPoly& f);
// PD of the Hermite matrix everywhere, through the leading principal minors.
RootCertificate certify_strictly_real_rooted(const BiPoly& f);
// Re-checks every claim of a certificate against f.
bool verify_certificate(const BiPoly& f, const RootCertificate& cert);

// (X^{-kd} f(X, X^k T)) at X^{-1} = 0. DomainError unless f is monic of
// degree d in the grading.
UniPoly roots_at_infinity(const BiPoly& f, int k, int d);

// No point of V(f~) in C^2 where f~ and both partials vanish, f~ the
// squarefree core of f.
bool smoothness_check(const BiPoly& f);

}  // namespace hypdet
