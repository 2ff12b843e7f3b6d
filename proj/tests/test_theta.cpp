#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "theta.hpp"

using namespace theta2;

namespace {

std::set<CongruenceClass> classes(std::initializer_list<CongruenceClass> cs) {
  return {cs.begin(), cs.end()};
}

}  // namespace

TEST_CASE("index normalization") {
  CHECK(normalize_index(9, 13) == 4);
  CHECK(normalize_index(9, -4) == 4);
  CHECK(normalize_index(9, 5) == 4);
  CHECK(normalize_index(9, 9) == 0);
  CHECK(normalize_index(3, 2) == 1);
}

TEST_CASE("half index") {
  CHECK(half_index(3, 1) == 1);
  CHECK(half_index(5, 1) == 2);
  CHECK(half_index(5, 0) == 0);
  CHECK(half_index(7, 1) == 3);  // 2*3 = 6 = -1 mod 7
  CHECK(half_index(9, 4) == 2);
  // defining property: 2*h = +-i (mod l)
  for (int64_t l : {3, 5, 7, 9, 11, 13, 15}) {
    for (int64_t i = 0; i <= l / 2; ++i) {
      const int64_t h = half_index(l, i);
      CHECK(normalize_index(l, 2 * h) == i);
    }
  }
}

TEST_CASE("theta series basics") {
  CHECK(theta_series(3, 0, 16).support() == std::vector<int64_t>{0});
  CHECK(theta_series(3, 1, 30).support() ==
        std::vector<int64_t>{1, 4, 16, 25});
  CHECK(theta_series(9, 4, 120).support() == std::vector<int64_t>{16, 25});
  // [13] = [4] for l = 9
  CHECK(theta_series(9, 13, 120) == theta_series(9, 4, 120));
  // valuation of [i] is i^2
  for (int64_t i = 1; i <= 7; ++i)
    CHECK(theta_series(15, i, 256).valuation() == i * i);
}

TEST_CASE("even part of [2i] is fourth power of [i]") {
  for (int64_t l : {3, 5, 7, 9, 11, 13, 15}) {
    for (int64_t i = 0; i <= l / 2; ++i) {
      auto lhs = theta_series(l, 2 * i, 2048).project(2, 0);
      auto rhs = theta_series(l, half_index(l, 2 * i), 2048).pow(4);
      CHECK(agree(lhs, rhs));
    }
  }
}

TEST_CASE("b_set") {
  auto g = Series::from_support(std::vector<int64_t>{0, 1}, 64);
  CHECK(b_set(g, 10) ==
        std::vector<int64_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

  // every element of B([r]) is -r^2 mod l and >= -r^2
  for (int64_t l : {3, 5, 9}) {
    for (int64_t r = 1; r <= l / 2; ++r) {
      if (std::gcd(r, l) != 1) continue;
      auto members = b_set(theta_series(l, r, 4096), 2048);
      for (int64_t n : members) {
        CHECK(((n + r * r) % l) == 0);
        CHECK(n >= -r * r);
      }
    }
  }

  CHECK_THROWS_AS(b_set(theta_series(3, 1, 64), 1000), Error);
}

TEST_CASE("exceptional sets") {
  CHECK(exceptional_set(3) == std::vector<int64_t>{-1});
  CHECK(exceptional_set(9) == std::vector<int64_t>{-16, -7, -4, -1});
  auto e5 = exceptional_set(5);
  CHECK(std::find(e5.begin(), e5.end(), -1) != e5.end());
  CHECK(std::find(e5.begin(), e5.end(), -4) != e5.end());
}

TEST_CASE("basic classes") {
  CHECK(basic_classes(3) == classes({{7, 8}}));
  CHECK(basic_classes(9) == classes({{1, 8}, {7, 8}, {28, 32}, {112, 128}}));
  for (const auto& c : basic_classes(15)) {
    CHECK(c.residue >= 0);
    CHECK(c.residue < c.modulus);
  }
}

TEST_CASE("U* class tables") {
  CHECK(ustar_classes(3) == classes({{0, 2}, {1, 4}, {3, 8}}));
  CHECK(ustar_classes(5) ==
        classes({{1, 4}, {2, 4}, {0, 8}, {3, 8}, {4, 16}, {12, 32}}));
  CHECK(ustar_classes(7) ==
        classes({{1, 4}, {0, 8}, {2, 8}, {3, 8}, {4, 16}, {6, 16}, {12, 32}}));
  CHECK(ustar_classes(9) == classes({{2, 4},
                                     {3, 8},
                                     {5, 8},
                                     {4, 16},
                                     {8, 16},
                                     {0, 32},
                                     {12, 32},
                                     {16, 64},
                                     {48, 128}}));
  CHECK(ustar_classes(11) == classes({{1, 8},
                                      {3, 8},
                                      {6, 8},
                                      {4, 16},
                                      {8, 16},
                                      {10, 16},
                                      {0, 32},
                                      {12, 32},
                                      {16, 64},
                                      {48, 128}}));
  CHECK(ustar_classes(13) == classes({{2, 8},
                                      {3, 8},
                                      {5, 8},
                                      {4, 16},
                                      {8, 16},
                                      {14, 16},
                                      {0, 32},
                                      {12, 32},
                                      {16, 64},
                                      {48, 128}}));
  CHECK(ustar_classes(15) == classes({{1, 8},
                                      {2, 8},
                                      {3, 8},
                                      {4, 16},
                                      {6, 16},
                                      {8, 16},
                                      {0, 32},
                                      {12, 32},
                                      {16, 64},
                                      {48, 128}}));
}

TEST_CASE("covered residues mod 128 for l=9") {
  CHECK(covered_residue_count(9, 128) == 37);
}

TEST_CASE("basic and U* classes partition the nonnegative integers") {
  for (int64_t l : {3, 5, 7, 9, 11, 13, 15}) {
    const auto basics = basic_classes(l);
    const auto ustar = ustar_classes(l);
    int64_t M = 8;
    for (const auto& c : basics) M = std::max(M, c.modulus);
    for (int64_t n = 0; n < 2 * M; ++n) {
      int hits = 0;
      for (const auto& c : basics) hits += (n % c.modulus) == c.residue;
      for (const auto& c : ustar) hits += (n % c.modulus) == c.residue;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("density count, small smoke") {
  // l=3, class 7 mod 8: first candidates are -1, 23, 47, ...; -1 is in B(a).
  const int64_t c10 = density_count(3, 1, {7, 8}, 10);
  CHECK(c10 >= 1);
  CHECK(c10 <= 10);
  // count is monotone in X
  CHECK(density_count(3, 1, {7, 8}, 20) >= c10);
  // budget error names the required precision
  RunConfig tiny;
  tiny.e_max = 100;
  CHECK_THROWS_AS(density_count(3, 1, {7, 8}, 1000, tiny), Error);
}
