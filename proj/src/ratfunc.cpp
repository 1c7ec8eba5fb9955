#include "hypdet/ratfunc.hpp"

#include "hypdet/error.hpp"

namespace hypdet {

RatFunc::RatFunc(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rational lc = den.leading();
  num_ = num * (1 / lc);
  den_ = den * (1 / lc);
}

const UniPoly& RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw WelldefinednessError("rational function " + to_string() + " is not a polynomial");
  return num_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

Rational RatFunc::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) return *this = RatFunc(num_ - o.num_, den_);
  return *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    if (num_.is_zero()) den_ = UniPoly::constant(1);
    return *this;
  }
  return *this = RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return *this = RatFunc(num_ * o.den_, den_ * o.num_);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFuncMatrix to_ratfunc(const PolyMatrix& m) {
  return m.map([](const UniPoly& p) { return RatFunc(p); });
}

PolyMatrix to_poly(const RatFuncMatrix& m) {
  return m.map([](const RatFunc& r) { return r.as_polynomial(); });
}

}  // namespace hypdet
