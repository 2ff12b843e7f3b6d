#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace theta2 {

// A Laurent series over GF(2) with an explicit precision window.
//
// The value is x^valuation * (bit 0 + bit 1 * x + ...), and coefficients are
// asserted correct exactly for exponents in [valuation, bound).  A nonzero
// series always has bit 0 set (normalized valuation), so every exponent below
// the valuation is a known zero.  The zero series is represented canonically
// by valuation == bound with no stored bits; its bound still records the
// window on which it is known to vanish.
//
// Values are immutable after construction; every operation returns a fresh
// series, so instances may be shared freely across threads.
class Series {
 public:
  Series() : val_(0), bound_(0) {}

  static Series zero(int64_t bound) { return Series(bound, bound, {}); }
  static Series one(int64_t bound) { return monomial(0, bound); }
  static Series monomial(int64_t exponent, int64_t bound);
  // Builds a series from the exponents with coefficient 1 (all < bound).
  static Series from_support(std::span<const int64_t> exponents, int64_t bound);

  bool is_zero() const { return val_ == bound_; }
  int64_t valuation() const { return val_; }
  int64_t bound() const { return bound_; }

  // Coefficient of x^n.  n >= bound is an error: the window does not certify
  // it.  n below the valuation of a (normalized) nonzero series is a true 0.
  int coeff_at(int64_t n) const;

  Series add(const Series& other) const;
  Series mul(const Series& other) const;
  Series square() const;
  // Newton iteration; result bound is bound() - 2*valuation().
  Series inverse() const;
  // Keeps exponents congruent to j mod q (q a power of two), renormalizes.
  Series project(uint64_t q, uint64_t j) const;
  // x^k * this (exact; shifts the window).
  Series shifted(int64_t k) const;
  // Restricts the window to bound <= new_bound (and renormalizes if needed).
  Series truncated(int64_t new_bound) const;
  Series pow(uint64_t e) const;

  // Exponents with coefficient 1 in [lo, hi); hi must be <= bound.
  std::vector<int64_t> support(int64_t lo, int64_t hi) const;
  std::vector<int64_t> support() const { return support(val_, bound_); }
  // Number of nonzero coefficients with exponent < hi (hi <= bound).
  int64_t popcount_below(int64_t hi) const;

  // Structural equality: same window, same coefficients.
  friend bool operator==(const Series& a, const Series& b);
  // Agreement on the overlap of the two windows: compares every exponent
  // below min(bound, other.bound).  Returns the first disagreeing exponent.
  friend std::optional<int64_t> first_difference(const Series& a,
                                                 const Series& b);

  // Dump format: "v=<valuation> E=<bound>" then the nonzero exponents in
  // increasing order, space-separated.  Bit-exact across platforms.
  std::string dump() const;

 private:
  Series(int64_t val, int64_t bound, std::vector<uint64_t> bits)
      : val_(val), bound_(bound), bits_(std::move(bits)) {}

  int bit(int64_t t) const {  // t relative to val_
    return static_cast<int>((bits_[static_cast<size_t>(t >> 6)] >>
                             (static_cast<uint64_t>(t) & 63)) &
                            1);
  }

  // Renormalizes a window [val, bound) with raw bits: finds the first set
  // bit, or collapses to the canonical zero.
  static Series normalized(int64_t val, int64_t bound,
                           std::vector<uint64_t> bits);

  int64_t val_;
  int64_t bound_;
  std::vector<uint64_t> bits_;  // bit t = coefficient of x^(val_ + t)
};

bool operator==(const Series& a, const Series& b);
std::optional<int64_t> first_difference(const Series& a, const Series& b);

inline bool agree(const Series& a, const Series& b) {
  return !first_difference(a, b).has_value();
}

}  // namespace theta2
