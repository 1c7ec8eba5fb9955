#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hypdet/bipoly.hpp"
#include "hypdet/ratfunc.hpp"

namespace hypdet {

// The modulus f of L = Q(X)[T]/(f), monic in T, with cached data.
class QuotModulus {
 public:
  explicit QuotModulus(BiPoly f);

  const BiPoly& poly() const { return f_; }
  int degree() const { return f_.degree_t(); }
  bool separable() const { return separable_; }
  // p_0, ..., p_{2d-1}
  const std::vector<UniPoly>& power_sums() const { return power_sums_; }

 private:
  BiPoly f_;
  bool separable_ = false;
  std::vector<UniPoly> power_sums_;
};

using ModulusPtr = std::shared_ptr<const QuotModulus>;
ModulusPtr make_modulus(const BiPoly& f);

// Element of L in the standard basis 1, alpha, ..., alpha^{d-1}.
class QuotElem {
 public:
  QuotElem() = default;
  QuotElem(ModulusPtr m, std::vector<RatFunc> coords);

  static QuotElem zero(const ModulusPtr& m);
  static QuotElem one(const ModulusPtr& m);
  static QuotElem alpha(const ModulusPtr& m);
  // Reduces a polynomial in T (coefficients in Q[X]) modulo f.
  static QuotElem from_poly(const ModulusPtr& m, const BiPoly& g);

  const ModulusPtr& modulus() const { return mod_; }
  int degree() const { return static_cast<int>(coords_.size()); }
  const std::vector<RatFunc>& coords() const { return coords_; }
  const RatFunc& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  bool has_polynomial_coords() const;

  // Multiplication-by-this matrix (column j = coordinates of this * alpha^j).
  RatFuncMatrix mult_matrix() const;
  // DomainError if this is a zero divisor.
  QuotElem inverse() const;

  friend QuotElem operator+(const QuotElem& a, const QuotElem& b);
  friend QuotElem operator-(const QuotElem& a, const QuotElem& b);
  friend QuotElem operator*(const QuotElem& a, const QuotElem& b);
  friend QuotElem operator*(const RatFunc& s, const QuotElem& a);
  friend bool operator==(const QuotElem& a, const QuotElem& b);
  friend bool operator!=(const QuotElem& a, const QuotElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  ModulusPtr mod_;
  std::vector<RatFunc> coords_;
};

// Product reduced mod f. DomainError on modulus mismatch.
QuotElem mul_mod(const QuotElem& a, const QuotElem& b);
QuotElem pow(const QuotElem& a, unsigned n);
// f'(alpha)
QuotElem derivative_at_alpha(const ModulusPtr& m);

// Trace of multiplication by a over Q(X).
RatFunc trace(const QuotElem& a);
// Tr(ab / f'(alpha)): the coefficient of alpha^{d-1} in ab. DomainError
// unless f is separable.
RatFunc sigma_form(const QuotElem& a, const QuotElem& b);
// beta_0(alpha), ..., beta_{d-1}(alpha) with sigma(alpha^l, beta_k) = delta.
std::vector<QuotElem> dual_basis(const ModulusPtr& m);

struct GramForm {
  PolyMatrix gram;
  std::vector<std::string> labels;
  bool unimodular = false;
};

// G_ij = Tr(b_i b_j / c). WelldefinednessError if an entry is not a
// polynomial; DomainError if c = 0.
GramForm beta_gram(const std::vector<QuotElem>& basis, const QuotElem& c);

// A polynomial matrix is unimodular iff its determinant is a nonzero constant.
bool is_unimodular(const PolyMatrix& g);

}  // namespace hypdet
