#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "groebner.hpp"
#include "theta.hpp"

using namespace theta2;

TEST_CASE("grevlex order") {
  // x1^5 > x2^5, x1*x2^2 < x1^2*x2
  auto cmp = [](const char* a, const char* b) {
    return grevlex_cmp(poly_parse(3, a).leading(), poly_parse(3, b).leading());
  };
  CHECK(cmp("x1^5", "x2^5") > 0);
  CHECK(cmp("x1x2^2", "x1^2x2") < 0);
  CHECK(cmp("x1x3", "x2^2") < 0);  // same degree, revlex tiebreak
  CHECK(cmp("x1^2", "x1x2") > 0);
  CHECK(cmp("x3^2", "x3^2") == 0);
}

TEST_CASE("poly parse and arithmetic") {
  auto p = poly_parse(2, "x2^2*(x1+x2^4)");
  CHECK(p == poly_parse(2, "x1x2^2 + x2^6"));
  CHECK(poly_parse(2, "x1+x1").is_zero());
  CHECK(poly_parse(2, "(x1+x2)^2") == poly_parse(2, "x1^2+x2^2"));
  CHECK(poly_parse(2, "x1").pow(5) == poly_parse(2, "x1^5"));
  CHECK_THROWS_AS(poly_parse(2, "x3"), Error);
  CHECK_THROWS_AS(poly_parse(2, "x1+"), Error);
}

TEST_CASE("quintic generators match the displayed lists") {
  auto gens5 = quintic_generators(5);
  REQUIRE(gens5.size() == 1);
  CHECK(gens5[0] == poly_parse(2, "x1^5+x2^5+x1x2+x1^2x2^2"));

  auto gens7 = quintic_generators(7);
  REQUIRE(gens7.size() == 3);
  auto has = [&](const char* s) {
    return std::find(gens7.begin(), gens7.end(), poly_parse(3, s)) !=
           gens7.end();
  };
  CHECK(has("x1^5+x3^4x2+x1x2+x2^2x3^2"));
  CHECK(has("x2^5+x1^4x3+x2x3+x3^2x1^2"));
  CHECK(has("x3^5+x2^4x1+x3x1+x1^2x2^2"));

  auto gens9 = quintic_generators(9);
  REQUIRE(gens9.size() == 6);
  auto has9 = [&](const char* s) {
    return std::find(gens9.begin(), gens9.end(), poly_parse(4, s)) !=
           gens9.end();
  };
  CHECK(has9("x1^5+x4^4x2+x1x2+x3^2x4^2"));
  CHECK(has9("x2^5+x1^4x4+x2x4+x3^2x1^2"));
  CHECK(has9("x4^5+x2^4x1+x4x1+x3^2x2^2"));
  CHECK(has9("x1^4x3+x3^4x2+x2x3+x2^2x4^2"));
  CHECK(has9("x2^4x3+x3^4x4+x4x3+x4^2x1^2"));
  CHECK(has9("x4^4x3+x3^4x1+x1x3+x1^2x2^2"));

  CHECK(quintic_generators(15).size() == 21);
  CHECK(quintic_generators(3).empty());
}

TEST_CASE("normal form") {
  auto p = poly_parse(2, "x1^2+x1x2");
  std::vector<Poly> basis{p};
  CHECK(normal_form(p, basis).is_zero());
  std::vector<Poly> bx{poly_parse(2, "x1")};
  CHECK(normal_form(poly_parse(2, "x1^2"), bx).is_zero());
  CHECK(normal_form(poly_parse(2, "x2"), bx) == poly_parse(2, "x2"));

  // R21*x1 + x2 reduces to x2 modulo the quintic ideal of l=5
  auto n5 = quintic_ideal(5);
  const auto& gb = n5.reduced_basis(100000);
  auto r21 = quintic_generators(5)[0];
  CHECK(normal_form(r21 * poly_parse(2, "x1") + poly_parse(2, "x2"), gb) ==
        poly_parse(2, "x2"));
}

TEST_CASE("normal form is idempotent and the reduced part stays in the ideal") {
  std::mt19937_64 rng(11);
  const auto gb = buchberger(quintic_generators(9));
  std::uniform_int_distribution<int> var(1, 4), ex(1, 3);
  for (int it = 0; it < 20; ++it) {
    // random polynomial in four variables
    std::vector<Monomial> terms;
    for (int t = 0; t < 6; ++t) {
      Monomial m(4);
      for (int f = 0; f < 3; ++f) m.e[var(rng) - 1] += ex(rng);
      terms.push_back(m);
    }
    const Poly p = Poly::from_terms(4, terms);
    const Poly nf = normal_form(p, gb);
    CHECK(normal_form(nf, gb) == nf);
    // p - nf lies in the ideal
    CHECK(normal_form(p + nf, gb).is_zero());
  }
}

TEST_CASE("buchberger basics") {
  auto b1 = buchberger({poly_parse(2, "x1")});
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == poly_parse(2, "x1"));

  auto b2 = buchberger({poly_parse(2, "x1x2+x2"), poly_parse(2, "x2")});
  REQUIRE(b2.size() == 1);
  CHECK(b2[0] == poly_parse(2, "x2"));

  // generators reduce to zero under the returned basis
  auto gens = quintic_generators(9);
  auto gb = buchberger(gens);
  for (const auto& g : gens) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("buchberger output is canonical under generator permutation") {
  auto gens = quintic_generators(7);
  auto gb1 = buchberger(gens);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 4; ++it) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(buchberger(gens) == gb1);
  }
}

TEST_CASE("every S-pair of the returned basis reduces to zero") {
  auto gb = buchberger(quintic_generators(9));
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const Monomial l = lcm(gb[i].leading(), gb[j].leading());
      const Poly s = gb[i].times_monomial(l / gb[i].leading()) +
                     gb[j].times_monomial(l / gb[j].leading());
      CHECK(normal_form(s, gb).is_zero());
    }
  }
}

TEST_CASE("budget exceeded is an explicit error") {
  GroebnerStats st;
  CHECK_THROWS_AS(buchberger(quintic_generators(9), 2, &st), Error);
  CHECK(st.pairs_processed >= 2);
}

TEST_CASE("exponent overflow is detected") {
  Monomial a(1), b(1);
  a.e[0] = 0xffffffffu;
  b.e[0] = 1;
  CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("ideal membership") {
  auto n5 = quintic_ideal(5);
  CHECK(ideal_member(quintic_generators(5)[0], n5));
  CHECK_FALSE(ideal_member(poly_parse(2, "x1"), n5));
  CHECK(ideal_equal(n5, n5));
}

TEST_CASE("certified quotients for l=5") {
  CHECK(certify_quotient(poly_parse(2, "x2^2*(x1+x2^4)"), poly_parse(2, "x1^2"), 5));
  CHECK(certify_quotient(poly_parse(2, "x2^8*(x1+x2^4)"), poly_parse(2, "x1^4"), 5));
  CHECK_FALSE(certify_quotient(poly_parse(2, "x1"), poly_parse(2, "x2"), 5));
}

TEST_CASE("certified quotient for l=7") {
  CHECK(certify_quotient(poly_parse(3, "x3^16(x1+x3^4)(x1^2x3^2+x1^4x2^4)"),
                         poly_parse(3, "x1^8"), 7));
}

TEST_CASE("phi_r evaluation") {
  // phi_1(x_k) = [k]; phi_2(x_1) = [2]
  CHECK(agree(phi_r(poly_parse(2, "x1"), 5, 1, 512), theta_series(5, 1, 512)));
  CHECK(agree(phi_r(poly_parse(2, "x1"), 5, 2, 512), theta_series(5, 2, 512)));
  CHECK_THROWS_AS(phi_r(poly_parse(2, "x1"), 15, 3, 128), Error);
}

TEST_CASE("quintic relations vanish under phi_r") {
  for (int64_t l : {5, 7, 9}) {
    for (int64_t r = 1; r <= l / 2; ++r) {
      if (std::gcd(r, l) != 1) continue;
      for (const auto& g : quintic_generators(l)) {
        CHECK(phi_r(g, l, r, 2048).is_zero());
      }
    }
  }
}

TEST_CASE("soundness bridge: certified quotients are power series") {
  auto u = poly_parse(2, "x2^2*(x1+x2^4)");
  auto v = poly_parse(2, "x1^2");
  REQUIRE(certify_quotient(u, v, 5));
  for (int64_t r : {1, 2}) {
    auto num = phi_r(u, 5, r, 2048);
    auto den = phi_r(v, 5, r, 2048);
    auto q = num.mul(den.inverse());
    CHECK(q.valuation() >= 0);
  }
}
