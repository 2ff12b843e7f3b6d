#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "series.hpp"
#include "theta.hpp"

namespace theta2 {

// A monomial in the theta generators: sorted (index, exponent) pairs with
// normalized indices in 1..m and positive exponents.  The empty monomial is
// the constant 1 (index 0 is absorbed).
using SMonomial = std::vector<std::pair<int64_t, int64_t>>;

// A formal GF(2) polynomial in the theta generators of a fixed odd modulus l.
// Duplicate monomials cancel on insertion.
class SPoly {
 public:
  explicit SPoly(int64_t l) : l_(l) {}

  static SPoly zero(int64_t l) { return SPoly(l); }
  static SPoly one(int64_t l);
  // The generator [k]; k is normalized, and [0] is the constant 1.
  static SPoly generator(int64_t l, int64_t k);
  static SPoly from_monomial(int64_t l, SMonomial m);

  int64_t modulus() const { return l_; }
  bool is_zero() const { return monomials_.empty(); }
  const std::set<SMonomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  int64_t degree() const;

  void toggle(const SMonomial& m);  // GF(2) insert-with-cancellation

  SPoly add(const SPoly& other) const;
  SPoly mul(const SPoly& other) const;
  SPoly mul_monomial(const SMonomial& m) const;
  SPoly square() const;  // doubles every exponent (char 2)
  SPoly pow(uint64_t e) const;

  // Evaluates to a series with theta inputs at precision E.
  Series eval(int64_t E) const;

  std::string to_string() const;

  friend bool operator==(const SPoly&, const SPoly&) = default;

 private:
  int64_t l_;
  std::set<SMonomial> monomials_;
};

// Grammar: terms separated by '+', a term is a product of factors "[k]" or
// "[k]^e" (optional '*', whitespace insignificant); indices are normalized
// mod +-l.  "1" denotes the empty monomial.
SPoly spoly_parse(int64_t l, const std::string& text);

inline Series eval_spoly(const SPoly& p, int64_t E) { return p.eval(E); }

// Symbolic projection: an SPoly whose evaluation equals
// eval(p).project(q, j).  Only q in {1, 2, 4, 8}: finer residues of odd
// squares are not expressible at this level (use the quotient ladder).
SPoly symbolic_project(const SPoly& p, uint64_t q, uint64_t j);

// Square root of an SPoly that arose as an even-part projection: monomials
// with all-even exponents take termwise roots; the three-monomial pattern of
// a projected product of two generators is folded through the sum/difference
// identity.  Anything else is rejected.
SPoly half_square_root(const SPoly& p);

// Square root of the even part from the pre-projection polynomial: returns G
// with eval(G)^2 = eval(w).project(2, 0).  Works for every w by expanding
// odd/even factor splits and pairing odd parts.
SPoly even_part_sqrt(const SPoly& w);

}  // namespace theta2
