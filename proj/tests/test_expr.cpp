#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "expr.hpp"
#include "groebner.hpp"
#include "ladder.hpp"
#include "spoly.hpp"
#include "theta.hpp"

using namespace theta2;

TEST_CASE("expression grammar basics") {
  // bracket atoms and powers
  CHECK(agree(expr_eval(expr_parse("[1]^4"), 5, 512),
              theta_series(5, 1, 512).pow(4)));
  // juxtaposition and explicit '*' are the same product
  CHECK(agree(expr_eval(expr_parse("[1][2]"), 5, 512),
              expr_eval(expr_parse("[1] * [2]"), 5, 512)));
  // parentheses and sums
  CHECK(agree(expr_eval(expr_parse("([1]+[2])^2"), 5, 512),
              theta_series(5, 1, 512).add(theta_series(5, 2, 512)).square()));
  // the constant factor
  CHECK(agree(expr_eval(expr_parse("1+[1]"), 5, 512),
              Series::one(512).add(theta_series(5, 1, 512))));
}

TEST_CASE("projection and reciprocal nodes") {
  const Series a = theta_series(3, 1, 2048);
  CHECK(agree(expr_eval(expr_parse("P(2,0; [1])"), 3, 2048),
              a.project(2, 0)));
  CHECK(agree(expr_eval(expr_parse("inv([1])"), 3, 2048), a.inverse()));
  // nesting: the even part of the reciprocal is a^2
  CHECK(agree(expr_eval(expr_parse("P(2,0; inv([1]))"), 3, 2048),
              a.pow(2)));
}

TEST_CASE("negative and out-of-range indices normalize") {
  CHECK(agree(expr_eval(expr_parse("[-1]"), 9, 512),
              theta_series(9, 1, 512)));
  CHECK(agree(expr_eval(expr_parse("[13]"), 9, 512),
              theta_series(9, 4, 512)));
  CHECK(agree(expr_eval(expr_parse("[0]"), 9, 512), Series::one(512)));
}

TEST_CASE("grammar errors") {
  CHECK_THROWS_AS(expr_parse("[1"), Error);
  // a non-power-of-2 modulus parses but fails on evaluation
  CHECK_THROWS_AS(expr_eval(expr_parse("P(3,0; [1])"), 5, 64), Error);
  CHECK_THROWS_AS(expr_parse("inv [1]"), Error);
  CHECK_THROWS_AS(expr_parse("[1] + + [2]"), Error);
  CHECK_THROWS_AS(expr_parse(""), Error);
  CHECK_THROWS_AS(expr_parse("[1] extra"), Error);
}

TEST_CASE("bracket translation honors the evaluation morphism, r != 1") {
  // translate [k] -> x_{k/r} so that the r-evaluation returns [k]
  for (int64_t l : {7, 9, 11}) {
    for (int64_t r = 2; r <= l / 2; ++r) {
      if (std::gcd(r, l) != 1) continue;
      const SPoly p = spoly_parse(l, "[1]^2[2] + [3]");
      const Poly q = spoly_to_poly(p, r);
      CHECK(agree(phi_r(q, l, r, 1024), p.eval(1024)));
    }
  }
}
