#include "hypdet/hermite.hpp"

#include "hypdet/error.hpp"
#include "hypdet/kernels.hpp"
#include "hypdet/sturm.hpp"

namespace hypdet {

std::vector<UniPoly> power_sums(const BiPoly& f, int count) {
  if (!f.is_monic_t()) throw DomainError("power_sums: polynomial not monic in T");
  const int d = f.degree_t();
  std::vector<UniPoly> p(static_cast<std::size_t>(std::max(count, 0)));
  for (int m = 0; m < count; ++m) {
    if (m == 0) {
      p[0] = UniPoly::constant(d);
      continue;
    }
    UniPoly acc;
    for (int j = 1; j <= std::min(m - 1, d); ++j) acc += f.coeff(d - j) * p[static_cast<std::size_t>(m - j)];
    if (m <= d) acc += f.coeff(d - m) * Rational(m);
    p[static_cast<std::size_t>(m)] = -acc;
  }
  return p;
}

SymMatrixPoly hermite_matrix(const BiPoly& f) {
  if (!f.is_monic_t()) throw DomainError("hermite_matrix: polynomial not monic in T");
  const int d = f.degree_t();
  std::vector<UniPoly> p = power_sums(f, std::max(2 * d - 1, 1));
  SymMatrixPoly h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) h(i, j) = p[static_cast<std::size_t>(i + j)];
  return h;
}

bool pd_on_line(const SymMatrixPoly& h) {
  if (!h.is_symmetric()) throw DomainError("pd_on_line: matrix not symmetric");
  for (const auto& m : leading_minors(h))
    if (check_positive(m)) return false;
  return true;
}

}  // namespace hypdet
