#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "series.hpp"
#include "support/reference_mul.hpp"

using theta2::Series;
using theta2::agree;
using theta2::first_difference;
using theta2::testing::random_series;
using theta2::testing::reference_mul;

namespace {

// Local enumeration oracle: sum of x^(n^2) over n = i mod l, n^2 < bound.
Series theta_by_enumeration(int64_t l, int64_t i, int64_t bound) {
  std::vector<int64_t> support;
  for (int64_t n = 0; n * n < bound; ++n) {
    const bool hit_pos = (n % l) == (i % l + l) % l;
    const bool hit_neg = ((-n) % l + l) % l == (i % l + l) % l;
    if (n == 0) {
      if (hit_pos) support.push_back(0);
    } else if (hit_pos != hit_neg) {  // both would cancel in GF(2)
      support.push_back(n * n);
    }
  }
  return Series::from_support(support, bound);
}

}  // namespace

TEST_CASE("add basics") {
  // (x + x^2) + (x^2 + x^3) = x + x^3
  auto f = Series::from_support(std::vector<int64_t>{1, 2}, 16);
  auto g = Series::from_support(std::vector<int64_t>{2, 3}, 16);
  CHECK(f.add(g).support() == std::vector<int64_t>{1, 3});
  // f + f = 0, with the window preserved
  auto z = f.add(f);
  CHECK(z.is_zero());
  CHECK(z.bound() == 16);
}

TEST_CASE("add of theta slices, l=5") {
  // Enumerated expectation: squares of n = +-1, +-2 mod 5 below 30.
  auto t1 = theta_by_enumeration(5, 1, 30);
  auto t2 = theta_by_enumeration(5, 2, 30);
  CHECK(t1.add(t2).support() == std::vector<int64_t>{1, 4, 9, 16});
}

TEST_CASE("mul basics") {
  auto one_plus_x = Series::from_support(std::vector<int64_t>{0, 1}, 64);
  auto sq = one_plus_x.mul(one_plus_x);
  CHECK(sq.support(0, 3) == std::vector<int64_t>{0, 2});

  auto xinv = Series::monomial(-1, 10);
  auto x = Series::monomial(1, 10);
  auto prod = xinv.mul(x);
  CHECK(prod.valuation() == 0);
  CHECK(prod.coeff_at(0) == 1);
}

TEST_CASE("mul bound propagation") {
  auto f = Series::from_support(std::vector<int64_t>{2, 5}, 20);
  auto g = Series::from_support(std::vector<int64_t>{-1, 3}, 12);
  auto p = f.mul(g);
  CHECK(p.valuation() == 1);
  CHECK(p.bound() == std::min<int64_t>(20 + -1, 12 + 2));
}

TEST_CASE("mul against quadratic reference") {
  std::mt19937_64 rng(20240811);
  for (int it = 0; it < 25; ++it) {
    auto f = random_series(rng, -8, 8, 2048);
    auto g = random_series(rng, -8, 8, 2048);
    auto fast = f.mul(g);
    auto ref = reference_mul(f, g);
    CHECK(fast == ref);
  }
}

TEST_CASE("mul against reference, theta-style sparse input") {
  auto t1 = theta_by_enumeration(5, 1, 2048);
  auto t2 = theta_by_enumeration(5, 2, 2048);
  CHECK(t1.mul(t2) == reference_mul(t1, t2));
}

TEST_CASE("square") {
  auto f = Series::from_support(std::vector<int64_t>{0, 1}, 8);
  CHECK(f.square().support() == std::vector<int64_t>{0, 2});
  auto xinv = Series::monomial(-1, 4);
  CHECK(xinv.square().valuation() == -2);

  std::mt19937_64 rng(7);
  for (int it = 0; it < 8; ++it) {
    auto g = random_series(rng, -4, 4, 4096);
    CHECK(agree(g.square(), g.mul(g)));
  }
}

TEST_CASE("inverse geometric series") {
  auto f = Series::from_support(std::vector<int64_t>{0, 1}, 32);
  auto inv = f.inverse();
  for (int64_t e = 0; e < 32; ++e) CHECK(inv.coeff_at(e) == 1);
}

TEST_CASE("inverse contract on random series") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 50; ++it) {
    auto f = random_series(rng, -6, 6, 1024);
    auto inv = f.inverse();
    CHECK(inv.valuation() == -f.valuation());
    CHECK(inv.bound() == f.bound() - 2 * f.valuation());
    auto prod = f.mul(inv);
    auto one = Series::one(prod.bound());
    CHECK(agree(prod, one));
  }
}

TEST_CASE("inverse of zero fails") {
  CHECK_THROWS_WITH_AS(Series::zero(8).inverse(), "division by zero series",
                       theta2::Error);
}

TEST_CASE("inverse of theta series has valuation -i^2") {
  // 1/[1] for l=3 leads with x^-1; 1/[4] for l=9 with x^-16 then x^-7.
  auto a3 = theta_by_enumeration(3, 1, 64);
  auto inv3 = a3.inverse();
  CHECK(inv3.valuation() == -1);
  CHECK(inv3.coeff_at(-1) == 1);

  auto a94 = theta_by_enumeration(9, 4, 120);
  auto inv94 = a94.inverse();
  CHECK(inv94.valuation() == -16);
  CHECK(inv94.coeff_at(-16) == 1);
  CHECK(inv94.coeff_at(-7) == 1);
  for (int64_t e = -15; e < -7; ++e) CHECK(inv94.coeff_at(e) == 0);
}

TEST_CASE("project basics") {
  auto f = Series::from_support(std::vector<int64_t>{-3, 0, 1, 4, 6, 9}, 16);
  auto p0 = f.project(2, 0);
  CHECK(p0.support() == std::vector<int64_t>{0, 4, 6});
  CHECK(p0.bound() == 16);
  auto p1 = f.project(2, 1);
  CHECK(p1.support() == std::vector<int64_t>{-3, 1, 9});
  CHECK(Series::zero(16).project(4, 1).is_zero());
  CHECK_THROWS_AS(f.project(3, 0), theta2::Error);
  CHECK_THROWS_AS(f.project(4, 4), theta2::Error);
}

TEST_CASE("projection direct sum, idempotence, refinement") {
  std::mt19937_64 rng(5150);
  for (int it = 0; it < 20; ++it) {
    auto f = random_series(rng, -16, 16, 1024);
    for (uint64_t q : {2u, 4u, 8u}) {
      Series sum = Series::zero(f.bound());
      for (uint64_t j = 0; j < q; ++j) {
        auto p = f.project(q, j);
        CHECK(p.project(q, j) == p);
        sum = sum.add(p);
      }
      CHECK(agree(sum, f));
      // refinement: p_{2q,j'} p_{q,j} = p_{2q,j'} iff j' = j mod q, else 0
      for (uint64_t j = 0; j < q; ++j) {
        auto p = f.project(q, j);
        for (uint64_t j2 = 0; j2 < 2 * q; ++j2) {
          auto fine = p.project(2 * q, j2);
          if (j2 % q == j) {
            CHECK(fine == f.project(2 * q, j2));
          } else {
            CHECK(fine.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("projection product and Frobenius rules") {
  std::mt19937_64 rng(424242);
  for (int it = 0; it < 10; ++it) {
    auto f = random_series(rng, -4, 4, 512);
    auto g = random_series(rng, -4, 4, 512);
    auto prod = f.mul(g);
    for (uint64_t q : {2u, 4u, 8u}) {
      for (uint64_t j = 0; j < q; ++j) {
        Series rhs = Series::zero(prod.bound());
        for (uint64_t a = 0; a < q; ++a) {
          const uint64_t b = (j + q - a % q) % q;
          rhs = rhs.add(f.project(q, a).mul(g.project(q, b)));
        }
        CHECK(agree(prod.project(q, j), rhs));
      }
    }
    for (uint64_t q : {1u, 2u, 4u}) {
      for (uint64_t j = 0; j < q; ++j) {
        auto lhs = f.square().project(2 * q, 2 * j);
        auto rhs = (q == 1 ? f : f.project(q, j)).square();
        CHECK(agree(lhs, rhs));
      }
    }
  }
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 15; ++it) {
    auto f = random_series(rng, -8, 8, 1024);
    auto g = random_series(rng, -8, 8, 1024);
    auto h = random_series(rng, -8, 8, 1024);
    CHECK(f.add(g) == g.add(f));
    CHECK(f.add(g).add(h) == f.add(g.add(h)));
    CHECK(agree(f.mul(g), g.mul(f)));
    CHECK(agree(f.mul(g).mul(h), f.mul(g.mul(h))));
    CHECK(agree(f.mul(g.add(h)), f.mul(g).add(f.mul(h))));
  }
}

TEST_CASE("coeff_at window discipline") {
  auto f = Series::from_support(std::vector<int64_t>{0, 1}, 4);
  CHECK(f.coeff_at(1) == 1);
  CHECK(f.coeff_at(-5) == 0);  // below valuation: known zero
  CHECK_THROWS_WITH_AS(f.coeff_at(4), "outside precision window",
                       theta2::Error);
}

TEST_CASE("truncated and shifted") {
  auto f = Series::from_support(std::vector<int64_t>{1, 5, 9}, 16);
  auto t = f.truncated(6);
  CHECK(t.bound() == 6);
  CHECK(t.support() == std::vector<int64_t>{1, 5});
  CHECK(f.truncated(1).is_zero());
  auto s = f.shifted(-2);
  CHECK(s.valuation() == -1);
  CHECK(s.support() == std::vector<int64_t>{-1, 3, 7});
}

TEST_CASE("dump format") {
  auto f = Series::from_support(std::vector<int64_t>{-2, 3, 5}, 9);
  CHECK(f.dump() == "v=-2 E=9\n-2 3 5\n");
  CHECK(Series::zero(7).dump() == "v=7 E=7\n\n");
}

TEST_CASE("normalization after cancellation") {
  auto f = Series::from_support(std::vector<int64_t>{2, 3}, 10);
  auto g = Series::from_support(std::vector<int64_t>{2, 7}, 10);
  auto s = f.add(g);
  CHECK(s.valuation() == 3);
  CHECK(s.support() == std::vector<int64_t>{3, 7});
}
