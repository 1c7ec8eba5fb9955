#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypdet/matrix.hpp"
#include "hypdet/upoly.hpp"

namespace hypdet {

// Element of Q[X][T], stored as its T-coefficients (polynomials in X).
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> t_coeffs);

  static BiPoly constant(const Rational& c) { return BiPoly({UniPoly::constant(c)}); }
  // Polynomial in X only.
  static BiPoly in_x(const UniPoly& p) { return BiPoly({p}); }
  // Polynomial in T with rational coefficients.
  static BiPoly in_t(const UniPoly& p);
  static BiPoly var_x() { return in_x(UniPoly::variable()); }
  static BiPoly var_t() { return BiPoly({UniPoly{}, UniPoly::constant(1)}); }
  // c * X^i * T^j
  static BiPoly monomial(const Rational& c, int x_exp, int t_exp);

  bool is_zero() const { return t_coeffs_.empty(); }
  int degree_t() const { return static_cast<int>(t_coeffs_.size()) - 1; }
  int degree_x() const;
  int total_degree() const;
  bool is_monic_t() const { return !is_zero() && t_coeffs_.back() == UniPoly::constant(1); }

  // Coefficient of T^i (zero outside range).
  UniPoly coeff(int i) const;
  const std::vector<UniPoly>& t_coefficients() const { return t_coeffs_; }
  const UniPoly& leading_t() const { return t_coeffs_.back(); }
  Rational coeff(int x_exp, int t_exp) const { return coeff(t_exp).coeff(x_exp); }

  // f(x, T) as a polynomial in T.
  UniPoly eval_x(const Rational& x) const;
  // f(X, t) as a polynomial in X.
  UniPoly eval_t(const Rational& t) const;
  Rational operator()(const Rational& x, const Rational& t) const { return eval_x(x)(t); }
  // Coefficient of X^n as a polynomial in T.
  UniPoly x_slice(int n) const;

  BiPoly d_t() const;
  BiPoly d_x() const;
  // f(X + c, T)
  BiPoly shift_x(const Rational& c) const;
  // f(X, T + h(X))
  BiPoly shift_t(const UniPoly& h) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const UniPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a) { return Rational(-1) * a; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_coeffs_ == b.t_coeffs_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  friend bool operator<(const BiPoly& a, const BiPoly& b);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<UniPoly> t_coeffs_;
};

BiPoly pow(const BiPoly& p, unsigned n);

// a = q * b exactly, else DomainError.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
// Division by a polynomial monic in T: a = q*b + r, deg_T r < deg_T b.
std::pair<BiPoly, BiPoly> divmod_monic(const BiPoly& a, const BiPoly& b);
// Pseudo-remainder in T.
BiPoly prem(const BiPoly& a, const BiPoly& b);

// Monic gcd over Q[X] of the T-coefficients.
UniPoly content_x(const BiPoly& p);
BiPoly primitive_part(const BiPoly& p);
// Scales by a rational so that the leading coefficient of the leading
// T-coefficient is 1.
BiPoly normalize_leading(const BiPoly& p);

// gcd in Q[X, T], normalized with normalize_leading.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

// Res_T(f, g) from the Sylvester matrix. Zero iff f, g share a factor of
// positive T-degree. DomainError on zero input.
UniPoly resultant_t(const BiPoly& f, const BiPoly& g);
// Res_T(f, f_T); zero iff f has a repeated factor of positive T-degree.
UniPoly discriminant_t(const BiPoly& f);

// deg_T f <= d and deg_X a_i <= k(d - i) for every T-coefficient a_i.
bool grading_member(const BiPoly& f, int k, int d);
// Smallest k with grading_member(f, k, deg_T f); f nonzero.
int minimal_grading(const BiPoly& f);

// Product of the distinct irreducible factors, normalized with
// normalize_leading. DomainError on zero input.
BiPoly squarefree_part(const BiPoly& p);
// For f monic in T: f = prod_i parts[i]^(i+1), parts monic in T, squarefree
// and pairwise coprime.
std::vector<BiPoly> squarefree_decomposition(const BiPoly& f);

template <>
struct RingTraits<BiPoly> {
  static BiPoly zero() { return {}; }
  static BiPoly one() { return BiPoly::constant(1); }
  static bool is_zero(const BiPoly& x) { return x.is_zero(); }
  static BiPoly exact_div(const BiPoly& a, const BiPoly& b) { return hypdet::exact_div(a, b); }
};

// det(T*I - A) for a square matrix over Q[X].
BiPoly char_poly(const PolyMatrix& a);

}  // namespace hypdet
