#pragma once

#include <vector>

#include "hypdet/upoly.hpp"

namespace hypdet {

// All principal minors of a square polynomial matrix, indexed by the bitmask
// of the selected rows/columns (entry 0 is the empty minor, 1).
std::vector<UniPoly> principal_minors(const PolyMatrix& h);
// Single-threaded reference for principal_minors.
std::vector<UniPoly> principal_minors_serial(const PolyMatrix& h);

// Leading principal minors of orders 1..n.
std::vector<UniPoly> leading_minors(const PolyMatrix& h);

// Rows selected by a bitmask, ascending.
std::vector<int> mask_to_rows(unsigned mask);

}  // namespace hypdet
