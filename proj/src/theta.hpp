#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "config.hpp"
#include "series.hpp"

namespace theta2 {

// A residue class j mod m.  Moduli are powers of two for the class tables;
// density filters allow arbitrary positive moduli.
struct CongruenceClass {
  int64_t residue = 0;
  int64_t modulus = 1;
  friend auto operator<=>(const CongruenceClass&,
                          const CongruenceClass&) = default;
};

// Generator indices are taken mod l and folded by the i ~ -i symmetry onto
// 0..m where l = 2m+1; index 0 stands for the constant series 1.
int64_t normalize_index(int64_t l, int64_t i);

// The index h with 2h = i (mod l), normalized.  The even-exponent part of
// the theta series for i is the fourth power of the series for h.
int64_t half_index(int64_t l, int64_t i);

// Sum of x^(n^2) over integers n congruent to i mod l, exponents < bound.
// Each square appears once for i != 0; for i = 0 everything but n = 0
// cancels in pairs, leaving the constant 1.
Series theta_series(int64_t l, int64_t i, int64_t bound);

// All exponents n < n_max with coefficient 1 in 1/g (negatives included).
// Throws a precision error naming the required bound when g is too short.
std::vector<int64_t> b_set(const Series& g, int64_t n_max);

// Negative exponents appearing in some 1/[r] with gcd(r,l)=1; computed
// exactly from the finite negative windows [-r^2, 0).
std::vector<int64_t> exceptional_set(int64_t l);

// For each exceptional k: the class k mod 8q, q the largest power of two
// dividing k.
std::set<CongruenceClass> basic_classes(int64_t l);

// Complement of the union of basic classes within the nonnegative integers,
// written as the canonical minimal set of dyadic congruence classes
// (greedy coarsest-modulus merge).
std::set<CongruenceClass> ustar_classes(int64_t l);

// Number of residues mod `modulus` covered by the basic classes.
int64_t covered_residue_count(int64_t l, int64_t modulus);

// Among the first X integers n >= -r^2 with n = -r^2 (mod l) and n in the
// given class, counts those with coefficient 1 in 1/[r].  The candidates
// form one arithmetic progression by CRT; the inverse series is streamed.
int64_t density_count(int64_t l, int64_t r, const CongruenceClass& cls,
                      int64_t X, const RunConfig& cfg = RunConfig::defaults());

}  // namespace theta2
