#pragma once

#include <cstdint>
#include <span>

namespace theta2 {

// Golden regression counts for the density experiments: among the first X
// candidates >= -r^2 in the class (residue mod modulus) meeting the mod-l
// congruence, the number lying in B([r]).
struct DensityRow {
  int64_t l, r, residue, modulus, X, expected;
};

std::span<const DensityRow> density_reference_rows();

}  // namespace theta2
