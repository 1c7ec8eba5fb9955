#pragma once

#include <string>

#include "hypdet/matrix.hpp"
#include "hypdet/upoly.hpp"

namespace hypdet {

// Element of Q(X) in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(UniPoly::constant(1)) {}
  RatFunc(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}  // NOLINT
  RatFunc(UniPoly p) : num_(std::move(p)), den_(UniPoly::constant(1)) {}                  // NOLINT
  RatFunc(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  // Throws WelldefinednessError unless the denominator is 1.
  const UniPoly& as_polynomial() const;

  RatFunc inverse() const;
  Rational operator()(const Rational& x) const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  UniPoly num_, den_;
};

template <>
struct RingTraits<RatFunc> {
  static RatFunc zero() { return {}; }
  static RatFunc one() { return RatFunc(Rational(1)); }
  static bool is_zero(const RatFunc& x) { return x.is_zero(); }
  static RatFunc exact_div(const RatFunc& a, const RatFunc& b) { return a / b; }
};

using RatFuncMatrix = Matrix<RatFunc>;

RatFuncMatrix to_ratfunc(const PolyMatrix& m);
// Throws WelldefinednessError if some entry is not a polynomial.
PolyMatrix to_poly(const RatFuncMatrix& m);

}  // namespace hypdet
