#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "config.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace theta2 {

struct GroebnerStats {
  int64_t pairs_processed = 0;
  std::size_t basis_size = 0;
};

// Remainder of p under repeated leading-term reduction by the basis.  Over
// GF(2) this is monomial division plus XOR.
Poly normal_form(const Poly& p, std::span<const Poly> basis);

// Reduced Groebner basis under grevlex; deterministic output (canonical for
// the order).  Pair selection is degree-minimal; the coprime-leading-term
// criterion and the chain criterion prune S-pairs.  Exceeding the pair
// budget throws with the statistics embedded in the message.
std::vector<Poly> buchberger(std::vector<Poly> gens,
                             int64_t pair_budget = 10'000'000,
                             GroebnerStats* stats = nullptr);

// An ideal with a lazily computed cached reduced basis.
class IdealF2 {
 public:
  IdealF2(std::size_t nvars, std::vector<Poly> gens)
      : nvars_(nvars), generators_(std::move(gens)) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& generators() const { return generators_; }
  const std::vector<Poly>& reduced_basis(int64_t pair_budget) const;

  bool contains(const Poly& p, int64_t pair_budget) const;

 private:
  std::size_t nvars_;
  std::vector<Poly> generators_;
  mutable std::optional<std::vector<Poly>> cached_basis_;
};

bool ideal_member(const Poly& p, const IdealF2& ideal,
                  const RunConfig& cfg = RunConfig::defaults());
bool ideal_equal(const IdealF2& lhs, const IdealF2& rhs,
                 const RunConfig& cfg = RunConfig::defaults());

// The ideal N generated by the quintic relations
// R_{i,j} = x_i^4 x_{2j} + x_j^4 x_{2i} + x_{2i} x_{2j} + x_{i+j}^2 x_{i-j}^2
// for m >= i > j >= 1, indices above m folded by x_{l-k} = x_k.
IdealF2 quintic_ideal(int64_t l);
std::vector<Poly> quintic_generators(int64_t l);

// Evaluation morphism x_k -> theta series of r*k, at precision E.
Series phi_r(const Poly& p, int64_t l, int64_t r, int64_t E);

// True certifies that phi_r(u)/phi_r(v) lies in the theta ring for every r
// prime to l: the ideals (N, v) and (N, u, v) coincide.
bool certify_quotient(const Poly& u, const Poly& v, int64_t l,
                      const RunConfig& cfg = RunConfig::defaults());

}  // namespace theta2
