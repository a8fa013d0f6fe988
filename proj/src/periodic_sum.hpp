#pragma once

#include <vector>

#include "mularith/types.hpp"

namespace mularith::detail {

// sum_{k=1}^{M} prod_i tables[i][k mod len_i], where each table is indexed
// by the residue of k modulo its own period len_i = tables[i].size().
// Runs in machine words when the magnitudes allow it and falls back to
// arbitrary precision otherwise.
Int periodic_product_sum(const std::vector<std::vector<Int>>& tables, Nat modulus);

// Same with rational entries; tables are put over a common denominator first.
Rational periodic_product_sum(const std::vector<std::vector<Rational>>& tables, Nat modulus);

}  // namespace mularith::detail
