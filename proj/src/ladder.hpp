#pragma once

#include <cstdint>

#include "poly.hpp"
#include "spoly.hpp"

namespace theta2 {

// Output of the descent: phi_r(u)/phi_r(v) equals the projection of 1/[r]
// onto j mod q as a series (checked numerically before returning).
struct LadderResult {
  Poly u;
  Poly v;
  int descents = 0;  // number of even-part square-root steps applied
};

// Builds polynomial representatives of p_{q,j}(1/[r]) as a quotient.
// While q > 8 with even j, one even-part descent halves (q, j); the q <= 8
// tail is closed-form through the symbolic projector.  Odd j above q = 8 has
// no ladder (odd squares are only constrained mod 8).
LadderResult quotient_ladder(int64_t l, int64_t r, uint64_t q, uint64_t j,
                             int64_t check_window = 2048);

// [k] -> x_{normalize(k/r)} so that phi_r maps the variables back onto the
// concrete generators.
Poly spoly_to_poly(const SPoly& p, int64_t r);

}  // namespace theta2
