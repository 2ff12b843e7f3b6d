#pragma once

#include <cstdint>
#include <vector>

#include "catalog.hpp"

namespace theta2 {

struct L3Options {
  int64_t n_max = 1'000'000;  // scan B(a) below this bound
  int64_t triple_samples = 12;  // how many 11 mod 24 members get the
                                // three-squares ratio check
};

// The elementary l=3 predicate suite over the members of B(a):
//  - even members have square halves,
//  - members 1 mod 4 have an odd count of s1+4*s2 square pairs and factor
//    as prime times square,
//  - members 3 mod 8 have an odd count of s1+2*s2 square pairs and factor
//    as prime times square,
//  - sampled members 11 mod 24 satisfy the 3-to-1 triple-count identity,
//  - the density of members inside the complement classes is reported
//    descriptively (never asserted).
std::vector<CheckReport> l3_suite(const L3Options& opts = {});

// Support of a + a^4 is 1 + 24*(generalized pentagonals), and membership of
// 24k-1 in B(a+a^4) matches the parity of the partition numbers computed by
// the pentagonal-number recurrence.
CheckReport partition_parity_check(int64_t k_max);

}  // namespace theta2
