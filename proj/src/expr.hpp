#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "series.hpp"

namespace theta2 {

// Expression tree over theta generators: sums, products, powers, the
// projection operator P(q,j; e) and formal reciprocals inv(e).  Used by the
// identity catalog; evaluation tracks precision through series-core.
class Expr {
 public:
  virtual ~Expr() = default;
  virtual Series eval(int64_t l, int64_t E) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

// Grammar (whitespace insignificant):
//   expr    := term ('+' term)*
//   term    := factor (('*')? factor)*
//   factor  := primary ('^' uint)?
//   primary := '[' int ']' | '1' | '(' expr ')'
//            | 'P(' uint ',' uint ';' expr ')' | 'inv(' expr ')'
ExprPtr expr_parse(const std::string& text);

Series expr_eval(const ExprPtr& e, int64_t l, int64_t E);

}  // namespace theta2
