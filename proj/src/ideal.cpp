#include "hypdet/ideal.hpp"

#include <algorithm>

#include "hypdet/error.hpp"

namespace hypdet {
namespace {

using Row = std::vector<UniPoly>;

void row_sub(Row& a, const Row& b, const UniPoly& q) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!b[j].is_zero()) a[j] -= q * b[j];
}

bool row_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](const UniPoly& p) { return p.is_zero(); });
}

// Row Hermite normal form of a matrix of rank d (d columns).
std::vector<Row> hermite_rows(std::vector<Row> rows, int d) {
  std::size_t top = 0;
  for (int col = 0; col < d; ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        const UniPoly& e = rows[r][static_cast<std::size_t>(col)];
        if (e.is_zero()) continue;
        if (best == rows.size() || e.degree() < rows[best][static_cast<std::size_t>(col)].degree()) best = r;
      }
      if (best == rows.size()) throw DomainError("module_canonical: generators have rank below d");
      std::swap(rows[top], rows[best]);
      bool done = true;
      const UniPoly piv = rows[top][static_cast<std::size_t>(col)];
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        const UniPoly& e = rows[r][static_cast<std::size_t>(col)];
        if (e.is_zero()) continue;
        row_sub(rows[r], rows[top], e / piv);
        if (!rows[r][static_cast<std::size_t>(col)].is_zero()) done = false;
      }
      if (done) break;
    }
    Rational inv = 1 / rows[top][static_cast<std::size_t>(col)].leading();
    for (auto& e : rows[top]) e *= inv;
    for (std::size_t r = 0; r < top; ++r) {
      const UniPoly& e = rows[r][static_cast<std::size_t>(col)];
      if (e.is_zero()) continue;
      row_sub(rows[r], rows[top], e / rows[top][static_cast<std::size_t>(col)]);
    }
    ++top;
  }
  rows.resize(static_cast<std::size_t>(d));
  return rows;
}

}  // namespace

std::vector<QuotElem> module_canonical(const std::vector<QuotElem>& gens) {
  if (gens.empty()) throw DomainError("module_canonical: no generators");
  const ModulusPtr& m = gens.front().modulus();
  const int d = m->degree();
  UniPoly den = UniPoly::constant(1);
  for (const auto& g : gens) {
    if (g.modulus()->poly() != m->poly()) throw DomainError("module_canonical: modulus mismatch");
    for (const auto& c : g.coords()) den = lcm(den, c.den());
  }
  std::vector<Row> rows;
  for (const auto& g : gens) {
    Row r(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) r[static_cast<std::size_t>(j)] = g.coord(j).num() * exact_div(den, g.coord(j).den());
    if (!row_zero(r)) rows.push_back(std::move(r));
  }
  rows = hermite_rows(std::move(rows), d);
  UniPoly g = den;
  for (const auto& r : rows)
    for (const auto& e : r) g = gcd(g, e);
  std::vector<QuotElem> out;
  for (const auto& r : rows) {
    std::vector<RatFunc> c;
    for (const auto& e : r) c.emplace_back(exact_div(e, g), exact_div(den, g));
    out.emplace_back(m, std::move(c));
  }
  return out;
}

bool same_module(const std::vector<QuotElem>& a, const std::vector<QuotElem>& b) {
  auto ca = module_canonical(a), cb = module_canonical(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return false;
  return true;
}

std::vector<QuotElem> principal_ideal(const QuotElem& g) {
  if (g.is_zero()) throw DomainError("principal_ideal of zero");
  std::vector<QuotElem> gens;
  QuotElem a = QuotElem::alpha(g.modulus());
  QuotElem cur = g;
  for (int j = 0; j < g.degree(); ++j) {
    gens.push_back(cur);
    cur = cur * a;
  }
  return module_canonical(gens);
}

std::vector<QuotElem> unit_ideal(const ModulusPtr& m) { return principal_ideal(QuotElem::one(m)); }

std::vector<QuotElem> ideal_mul(const std::vector<QuotElem>& a, const std::vector<QuotElem>& b) {
  std::vector<QuotElem> gens;
  for (const auto& x : a)
    for (const auto& y : b) gens.push_back(mul_mod(x, y));
  return module_canonical(gens);
}

bool verify_square(const IdealWitness& w) {
  if (!w.modulus->separable()) throw DomainError("verify_square: modulus is not separable");
  if (w.c.is_zero()) return false;
  QuotElem target = w.c * derivative_at_alpha(w.modulus).inverse();
  auto square = ideal_mul(w.basis, w.basis);
  auto rhs = principal_ideal(target);
  for (std::size_t i = 0; i < square.size(); ++i)
    if (square[i] != rhs[i]) return false;
  return true;
}

PolyMatrix mult_alpha_matrix(const std::vector<QuotElem>& basis) {
  if (basis.empty()) throw DomainError("mult_alpha_matrix: empty basis");
  const ModulusPtr& m = basis.front().modulus();
  const int d = m->degree();
  if (static_cast<int>(basis.size()) != d) throw DomainError("mult_alpha_matrix: basis size differs from d");
  RatFuncMatrix b(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) b(i, j) = basis[static_cast<std::size_t>(j)].coord(i);
  auto binv = inverse(b);
  if (!binv) throw DomainError("mult_alpha_matrix: basis is not linearly independent");
  RatFuncMatrix mm = *binv * QuotElem::alpha(m).mult_matrix() * b;
  PolyMatrix out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (!mm(i, j).is_polynomial()) throw DomainError("mult_alpha_matrix: alpha * I is not contained in I");
      out(i, j) = mm(i, j).num();
    }
  return out;
}

}  // namespace hypdet
