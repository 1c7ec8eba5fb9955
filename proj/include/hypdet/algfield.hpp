#pragma once

#include <vector>

#include "hypdet/upoly.hpp"

namespace hypdet {

// The field Q[z]/(q) for an irreducible q; elements are reduced UniPolys.
class AlgField {
 public:
  explicit AlgField(UniPoly modulus);

  const UniPoly& modulus() const { return modulus_; }
  UniPoly reduce(const UniPoly& a) const { return a % modulus_; }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return (a * b) % modulus_; }
  UniPoly inv(const UniPoly& a) const;

  // Polynomials over the field, lowest degree first, trimmed.
  using Poly = std::vector<UniPoly>;
  Poly reduce(const Poly& a) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly rem(const Poly& a, const Poly& b) const;
  Poly divide(const Poly& a, const Poly& b, Poly* remainder = nullptr) const;
  Poly monic(const Poly& a) const;
  // Monic gcd; empty iff both inputs are zero.
  Poly gcd(Poly a, Poly b) const;

 private:
  UniPoly modulus_;
};

}  // namespace hypdet
