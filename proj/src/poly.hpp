#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace theta2 {

// Exponent vector in x_1..x_m.  Fixed-width exponents with overflow checks:
// a silent wrap would forge certificates.
struct Monomial {
  std::vector<uint32_t> e;

  explicit Monomial(std::size_t nvars = 0) : e(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }
  int64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // quotient a / b; requires b.divides(a)
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded reverse lexicographic with x_1 > x_2 > ... > x_m.
// Returns <0 if a < b, 0 if equal, >0 if a > b.
int grevlex_cmp(const Monomial& a, const Monomial& b);

// GF(2) polynomial: term set kept in descending monomial order, coefficients
// implicitly 1, duplicates cancel.
class Poly {
 public:
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly from_terms(std::size_t nvars, std::vector<Monomial> terms);
  static Poly variable(std::size_t nvars, std::size_t index_1based,
                       uint32_t power = 1);
  static Poly constant_one(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }
  const Monomial& leading() const;
  int64_t degree() const;

  friend Poly operator+(const Poly& a, const Poly& b);  // XOR merge
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly times_monomial(const Monomial& m) const;
  Poly square() const;
  Poly pow(uint64_t e) const;

  std::string to_string() const;
  friend bool operator==(const Poly&, const Poly&) = default;
  friend bool operator<(const Poly& a, const Poly& b);  // by leading term

 private:
  std::size_t nvars_;
  std::vector<Monomial> terms_;  // descending grevlex
};

// Grammar: variables x1..xm, '+', '*' (juxtaposition allowed), '^',
// parentheses; characteristic-2 normalization on parse.
Poly poly_parse(std::size_t nvars, const std::string& text);

}  // namespace theta2
