#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypdet/matrix.hpp"
#include "hypdet/rational.hpp"

namespace hypdet {

// Dense univariate polynomial over Q, lowest degree first. The leading
// coefficient is nonzero unless the polynomial is zero (empty vector).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  // Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;
  std::vector<double> to_double() const;

  UniPoly derivative() const;
  UniPoly monic() const;
  // p(x + c)
  UniPoly shift(const Rational& c) const;
  // p(c * x)
  UniPoly scale_var(const Rational& c) const;
  // x^degree * p(1/x), degree >= deg p
  UniPoly reversed(int degree) const;
  UniPoly truncated(int max_degree) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  // Total order: by degree, then coefficients from the top.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

  std::string to_string(char var = 'X') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws DomainError on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
// Throws DomainError unless b divides a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& b, const UniPoly& a);

// Monic gcd (zero iff both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly lcm(const UniPoly& a, const UniPoly& b);
// g = s*a + t*b with g = gcd(a, b) monic.
struct ExtGcd {
  UniPoly g, s, t;
};
ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& p, unsigned n);
// p(q(x))
UniPoly compose(const UniPoly& p, const UniPoly& q);

// Monic product of the distinct irreducible factors.
UniPoly squarefree_part(const UniPoly& p);
// Yun: p = lc * prod_i parts[i]^(i+1), each part monic squarefree, pairwise coprime.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

// Common denominator d and integer polynomial d*p.
std::vector<Integer> integer_coefficients(const UniPoly& p, Integer* denominator = nullptr);

// Maximum |coefficient|.
Rational max_abs_coeff(const UniPoly& p);

template <>
struct RingTraits<UniPoly> {
  static UniPoly zero() { return {}; }
  static UniPoly one() { return UniPoly::constant(1); }
  static bool is_zero(const UniPoly& x) { return x.is_zero(); }
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return hypdet::exact_div(a, b); }
};

using PolyMatrix = Matrix<UniPoly>;
using RatMatrix = Matrix<Rational>;

}  // namespace hypdet
