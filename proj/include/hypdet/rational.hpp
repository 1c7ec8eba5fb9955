#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypdet {

// Exact rational with canonical (reduced, positive denominator) form.
using Rational = mpq_class;
using Integer = mpz_class;

// n/d in lowest terms; d nonzero.
inline Rational make_rational(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q" and canonicalizes. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

// Largest integer <= r.
Integer floor(const Rational& r);

// True iff r = s^2 for some rational s; stores s >= 0 in *root.
bool rational_sqrt(const Rational& r, Rational* root);

}  // namespace hypdet
