#include "hypdet/algfield.hpp"

#include "hypdet/error.hpp"

namespace hypdet {
namespace {

void trim(AlgField::Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int deg(const AlgField::Poly& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace

AlgField::AlgField(UniPoly modulus) : modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw DomainError("AlgField: modulus must have positive degree");
  modulus_ = modulus_.monic();
}

UniPoly AlgField::inv(const UniPoly& a) const {
  ExtGcd eg = ext_gcd(reduce(a), modulus_);
  if (eg.g.degree() != 0) throw DomainError("AlgField: element not invertible");
  return reduce(eg.s);
}

AlgField::Poly AlgField::reduce(const Poly& a) const {
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(reduce(c));
  trim(r);
  return r;
}

AlgField::Poly AlgField::sub(const Poly& a, const Poly& b) const {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

AlgField::Poly AlgField::mul(const Poly& a, const Poly& b) const {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(r);
}

AlgField::Poly AlgField::divide(const Poly& a, const Poly& b, Poly* remainder) const {
  if (b.empty()) throw DomainError("AlgField: polynomial division by zero");
  Poly r = reduce(a);
  Poly q(static_cast<std::size_t>(std::max(deg(r) - deg(b) + 1, 0)));
  UniPoly lead_inv = inv(b.back());
  while (!r.empty() && deg(r) >= deg(b)) {
    const int shift = deg(r) - deg(b);
    UniPoly c = mul(r.back(), lead_inv);
    q[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto& x = r[static_cast<std::size_t>(shift + j)];
      x = reduce(x - c * b[static_cast<std::size_t>(j)]);
    }
    trim(r);
  }
  trim(q);
  if (remainder) *remainder = std::move(r);
  return q;
}

AlgField::Poly AlgField::rem(const Poly& a, const Poly& b) const {
  Poly r;
  divide(a, b, &r);
  return r;
}

AlgField::Poly AlgField::monic(const Poly& a) const {
  if (a.empty()) return a;
  UniPoly li = inv(a.back());
  Poly r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(mul(c, li));
  return r;
}

AlgField::Poly AlgField::gcd(Poly a, Poly b) const {
  a = reduce(a);
  b = reduce(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

}  // namespace hypdet
