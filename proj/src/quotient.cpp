#include "hypdet/quotient.hpp"

#include "hypdet/error.hpp"
#include "hypdet/hermite.hpp"

namespace hypdet {

QuotModulus::QuotModulus(BiPoly f) : f_(std::move(f)) {
  if (!f_.is_monic_t() || f_.degree_t() < 1) throw DomainError("quotient modulus must be monic in T of positive degree");
  separable_ = !discriminant_t(f_).is_zero();
  power_sums_ = hypdet::power_sums(f_, 2 * f_.degree_t());
}

ModulusPtr make_modulus(const BiPoly& f) { return std::make_shared<const QuotModulus>(f); }

namespace {

void require_same(const QuotElem& a, const QuotElem& b) {
  if (!a.modulus() || !b.modulus()) throw DomainError("quotient element without modulus");
  if (a.modulus() != b.modulus() && a.modulus()->poly() != b.modulus()->poly())
    throw DomainError("quotient elements with different moduli");
}

// Reduces a coefficient list of arbitrary length modulo the monic f.
std::vector<RatFunc> reduce(std::vector<RatFunc> c, const BiPoly& f) {
  const int d = f.degree_t();
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    RatFunc top = c[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      const UniPoly& fj = f.t_coefficients()[static_cast<std::size_t>(j)];
      if (!fj.is_zero()) c[static_cast<std::size_t>(i - d + j)] -= top * RatFunc(fj);
    }
  }
  c.resize(static_cast<std::size_t>(d));
  return c;
}

}  // namespace

QuotElem::QuotElem(ModulusPtr m, std::vector<RatFunc> coords) : mod_(std::move(m)), coords_(std::move(coords)) {
  if (!mod_) throw DomainError("quotient element without modulus");
  if (static_cast<int>(coords_.size()) > mod_->degree()) coords_ = reduce(std::move(coords_), mod_->poly());
  coords_.resize(static_cast<std::size_t>(mod_->degree()));
}

QuotElem QuotElem::zero(const ModulusPtr& m) { return QuotElem(m, {}); }
QuotElem QuotElem::one(const ModulusPtr& m) { return QuotElem(m, {RatFunc(Rational(1))}); }

QuotElem QuotElem::alpha(const ModulusPtr& m) {
  return QuotElem(m, {RatFunc(), RatFunc(Rational(1))});
}

QuotElem QuotElem::from_poly(const ModulusPtr& m, const BiPoly& g) {
  std::vector<RatFunc> c;
  for (const auto& a : g.t_coefficients()) c.emplace_back(a);
  return QuotElem(m, std::move(c));
}

bool QuotElem::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool QuotElem::has_polynomial_coords() const {
  for (const auto& c : coords_)
    if (!c.is_polynomial()) return false;
  return true;
}

QuotElem operator+(const QuotElem& a, const QuotElem& b) {
  require_same(a, b);
  std::vector<RatFunc> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return QuotElem(a.mod_, std::move(c));
}

QuotElem operator-(const QuotElem& a, const QuotElem& b) {
  require_same(a, b);
  std::vector<RatFunc> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return QuotElem(a.mod_, std::move(c));
}

QuotElem operator*(const QuotElem& a, const QuotElem& b) {
  require_same(a, b);
  const std::size_t d = a.coords_.size();
  std::vector<RatFunc> c(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!b.coords_[j].is_zero()) c[i + j] += a.coords_[i] * b.coords_[j];
  }
  return QuotElem(a.mod_, reduce(std::move(c), a.mod_->poly()));
}

QuotElem operator*(const RatFunc& s, const QuotElem& a) {
  std::vector<RatFunc> c = a.coords_;
  for (auto& x : c) x *= s;
  return QuotElem(a.mod_, std::move(c));
}

bool operator==(const QuotElem& a, const QuotElem& b) {
  require_same(a, b);
  return a.coords_ == b.coords_;
}

RatFuncMatrix QuotElem::mult_matrix() const {
  const int d = degree();
  RatFuncMatrix m(d, d);
  QuotElem col = *this;
  QuotElem a = alpha(mod_);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m(i, j) = col.coord(i);
    if (j + 1 < d) col = col * a;
  }
  return m;
}

QuotElem QuotElem::inverse() const {
  auto inv = hypdet::inverse(mult_matrix());
  if (!inv) throw DomainError("quotient element is not invertible");
  std::vector<RatFunc> c(static_cast<std::size_t>(degree()));
  for (int i = 0; i < degree(); ++i) c[static_cast<std::size_t>(i)] = (*inv)(i, 0);
  return QuotElem(mod_, std::move(c));
}

std::string QuotElem::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].to_string();
  }
  return s + "]";
}

QuotElem mul_mod(const QuotElem& a, const QuotElem& b) { return a * b; }

QuotElem pow(const QuotElem& a, unsigned n) {
  QuotElem r = QuotElem::one(a.modulus()), base = a;
  while (n > 0) {
    if (n & 1U) r = r * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return r;
}

QuotElem derivative_at_alpha(const ModulusPtr& m) { return QuotElem::from_poly(m, m->poly().d_t()); }

RatFunc trace(const QuotElem& a) {
  const auto& p = a.modulus()->power_sums();
  RatFunc t;
  for (int j = 0; j < a.degree(); ++j)
    if (!a.coord(j).is_zero()) t += a.coord(j) * RatFunc(p[static_cast<std::size_t>(j)]);
  return t;
}

RatFunc sigma_form(const QuotElem& a, const QuotElem& b) {
  if (!a.modulus()->separable()) throw DomainError("sigma_form: modulus is not separable");
  QuotElem ab = a * b;
  return ab.coord(ab.degree() - 1);
}

std::vector<QuotElem> dual_basis(const ModulusPtr& m) {
  if (!m->separable()) throw DomainError("dual_basis: modulus is not separable");
  const int d = m->degree();
  const BiPoly& f = m->poly();
  std::vector<QuotElem> out;
  for (int k = 0; k < d; ++k) {
    std::vector<RatFunc> c(static_cast<std::size_t>(d));
    for (int i = k + 1; i <= d; ++i) c[static_cast<std::size_t>(i - 1 - k)] = RatFunc(f.coeff(i));
    out.emplace_back(m, std::move(c));
  }
  return out;
}

bool is_unimodular(const PolyMatrix& g) {
  if (!g.square()) return false;
  UniPoly det = det_bareiss(g);
  return !det.is_zero() && det.degree() == 0;
}

GramForm beta_gram(const std::vector<QuotElem>& basis, const QuotElem& c) {
  if (c.is_zero()) throw DomainError("beta_gram: c = 0");
  QuotElem cinv = c.inverse();
  const int n = static_cast<int>(basis.size());
  GramForm out;
  out.gram = PolyMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    QuotElem bi = basis[static_cast<std::size_t>(i)] * cinv;
    for (int j = i; j < n; ++j) {
      RatFunc t = trace(bi * basis[static_cast<std::size_t>(j)]);
      if (!t.is_polynomial())
        throw WelldefinednessError("beta_gram: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + t.to_string() + " is not a polynomial");
      out.gram(i, j) = t.num();
      out.gram(j, i) = t.num();
    }
    out.labels.push_back("b" + std::to_string(i));
  }
  out.unimodular = is_unimodular(out.gram);
  return out;
}

}  // namespace hypdet
