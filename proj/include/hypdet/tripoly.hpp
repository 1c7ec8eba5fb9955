#pragma once

#include <array>
#include <map>
#include <string>

#include "hypdet/bipoly.hpp"
#include "hypdet/matrix.hpp"

namespace hypdet {

using Exponent3 = std::array<int, 3>;
using Point3 = std::array<Rational, 3>;

// Polynomial in X, Y, Z with rational coefficients (sparse).
class TriPoly {
 public:
  TriPoly() = default;
  static TriPoly constant(const Rational& c);
  static TriPoly monomial(const Rational& c, const Exponent3& e);
  // Linear form a*X + b*Y + c*Z.
  static TriPoly linear(const Point3& coeffs);

  const std::map<Exponent3, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;

  Rational operator()(const Point3& p) const;
  // F(P * (X, Y, Z)^T) for a 3x3 matrix P.
  TriPoly substitute(const RatMatrix& p) const;
  // F(X, 1, T) and F(1, X, T) as polynomials in X, T.
  BiPoly chart_y() const;
  BiPoly chart_x() const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const Rational& c, const TriPoly& a);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(const Exponent3& e, const Rational& c);
  std::map<Exponent3, Rational> terms_;
};

TriPoly pow(const TriPoly& p, unsigned n);

template <>
struct RingTraits<TriPoly> {
  static TriPoly zero() { return {}; }
  static TriPoly one() { return TriPoly::constant(1); }
  static bool is_zero(const TriPoly& x) { return x.is_zero(); }
};

// Invertible P whose last column is e (the other columns are standard basis
// vectors). DomainError if e = 0.
RatMatrix frame_for_direction(const Point3& e);

// F(e) > 0 and F(Te - a) is real rooted for every real a. DomainError if F
// is not homogeneous or F(e) = 0.
bool is_hyperbolic(const TriPoly& f, const Point3& e);

}  // namespace hypdet
