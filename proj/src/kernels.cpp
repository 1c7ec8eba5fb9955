#include "hypdet/kernels.hpp"

#include "hypdet/error.hpp"

namespace hypdet {
namespace {

UniPoly minor_for_mask(const PolyMatrix& h, unsigned mask) {
  if (mask == 0) return UniPoly::constant(1);
  std::vector<int> rows = mask_to_rows(mask);
  return det_bareiss(h.submatrix(rows, rows));
}

void check_square(const PolyMatrix& h) {
  if (!h.square()) throw DomainError("principal minors of a non-square matrix");
  if (h.rows() > 20) throw DomainError("principal minors: dimension too large");
}

}  // namespace

std::vector<int> mask_to_rows(unsigned mask) {
  std::vector<int> rows;
  for (int i = 0; mask != 0; ++i, mask >>= 1U)
    if (mask & 1U) rows.push_back(i);
  return rows;
}

std::vector<UniPoly> principal_minors_serial(const PolyMatrix& h) {
  check_square(h);
  const unsigned count = 1U << static_cast<unsigned>(h.rows());
  std::vector<UniPoly> out(count);
  for (unsigned mask = 0; mask < count; ++mask) out[mask] = minor_for_mask(h, mask);
  return out;
}

std::vector<UniPoly> principal_minors(const PolyMatrix& h) {
  check_square(h);
  const long count = 1L << h.rows();
  std::vector<UniPoly> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (long mask = 0; mask < count; ++mask) out[static_cast<std::size_t>(mask)] = minor_for_mask(h, static_cast<unsigned>(mask));
  return out;
}

std::vector<UniPoly> leading_minors(const PolyMatrix& h) {
  if (!h.square()) throw DomainError("leading minors of a non-square matrix");
  std::vector<UniPoly> out;
  for (int k = 1; k <= h.rows(); ++k) {
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i;
    out.push_back(det_bareiss(h.submatrix(rows, rows)));
  }
  return out;
}

}  // namespace hypdet
