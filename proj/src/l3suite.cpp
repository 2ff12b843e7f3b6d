#include "l3suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "theta.hpp"

namespace theta2 {

namespace {

int64_t isqrt(int64_t n) {
  if (n < 0) return -1;
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(int64_t n) {
  if (n < 0) return false;
  const int64_t r = isqrt(n);
  return r * r == n;
}

// n = prime * square, by trial division (exactly one prime has odd exponent)
bool is_prime_times_square(int64_t n) {
  if (n <= 1) return false;
  int odd_exponents = 0;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1 && ++odd_exponents > 1) return false;
  }
  if (n > 1) ++odd_exponents;  // leftover prime
  return odd_exponents == 1;
}

// number of pairs (s1, s2) of squares with s1 + c*s2 = n
int64_t square_pair_count(int64_t n, int64_t c) {
  int64_t count = 0;
  for (int64_t b = 0; c * b * b <= n; ++b) {
    if (is_square(n - c * b * b)) ++count;
  }
  return count;
}

// ordered triples of squares summing to n
int64_t square_triple_count(int64_t n) {
  int64_t count = 0;
  for (int64_t a = 0; a * a <= n; ++a) {
    for (int64_t b = 0; a * a + b * b <= n; ++b) {
      if (is_square(n - a * a - b * b)) ++count;
    }
  }
  return count;
}

// triples (r1, r2, r3), all 1 mod 3, with r1^2 + 2 r2^2 + 8 r3^2 = n
int64_t residue_triple_count(int64_t n) {
  int64_t count = 0;
  auto each_residue = [](int64_t bound, auto&& fn) {
    // signed integers r with r = 1 mod 3 and |r| <= bound
    for (int64_t r = 1; r <= bound; r += 3) fn(r);
    for (int64_t r = -2; -r <= bound; r -= 3) fn(r);
  };
  const int64_t b3 = isqrt(n / 8);
  each_residue(b3, [&](int64_t r3) {
    const int64_t rest2 = n - 8 * r3 * r3;
    const int64_t b2 = isqrt(rest2 / 2);
    each_residue(b2, [&](int64_t r2) {
      const int64_t t = rest2 - 2 * r2 * r2;
      const int64_t s = isqrt(t);
      if (s >= 0 && s * s == t && s % 3 != 0) ++count;  // one sign of s is 1 mod 3
    });
  });
  return count;
}

CheckReport make_report(const std::string& id, bool pass,
                        const std::string& witness, int64_t ms) {
  return CheckReport{id, "numeric", pass ? "pass" : "fail",
                     witness, ms};
}

}  // namespace

std::vector<CheckReport> l3_suite(const L3Options& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  auto ms = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };

  const int64_t n_max = opts.n_max;
  const Series inv = theta_series(3, 1, n_max + 3).inverse();
  const std::vector<int64_t> members = inv.support(-1, n_max);

  std::vector<CheckReport> out;

  // (i) even members have square halves; there are at most ~sqrt(n_max/2)
  {
    int64_t even_count = 0;
    int64_t bad = -1;
    for (int64_t n : members) {
      if (n >= 0 && n % 2 == 0) {
        ++even_count;
        if (!is_square(n / 2)) {
          bad = n;
          break;
        }
      }
    }
    std::ostringstream os;
    if (bad >= 0) {
      os << "member " << bad << " has non-square half";
    } else {
      os << even_count << " even members, all with square halves";
    }
    out.push_back(make_report("l3.even-square-half", bad < 0, os.str(), ms()));
    const bool bounded = even_count <= isqrt(n_max / 2) + 1;
    out.push_back(make_report(
        "l3.even-count-bound", bounded,
        std::to_string(even_count) + " even members below " +
            std::to_string(n_max),
        ms()));
  }

  // (ii) members 1 mod 4: odd pair count for s1 + 4 s2 = n, prime * square
  {
    int64_t checked = 0, bad_pairs = -1, bad_factor = -1;
    for (int64_t n : members) {
      if (n < 0 || n % 4 != 1) continue;
      ++checked;
      if (bad_pairs < 0 && square_pair_count(n, 4) % 2 == 0) bad_pairs = n;
      if (bad_factor < 0 && !is_prime_times_square(n)) bad_factor = n;
      if (bad_pairs >= 0 && bad_factor >= 0) break;
    }
    out.push_back(make_report(
        "l3.class1mod4-pair-parity", bad_pairs < 0,
        bad_pairs < 0 ? std::to_string(checked) + " members checked"
                      : "even pair count at " + std::to_string(bad_pairs),
        ms()));
    out.push_back(make_report(
        "l3.class1mod4-prime-square", bad_factor < 0,
        bad_factor < 0 ? std::to_string(checked) + " members factored"
                       : "not prime times square: " + std::to_string(bad_factor),
        ms()));
  }

  // (iii) members 3 mod 8: odd pair count for s1 + 2 s2 = n, prime * square
  {
    int64_t checked = 0, bad_pairs = -1, bad_factor = -1;
    for (int64_t n : members) {
      if (n < 0 || n % 8 != 3) continue;
      ++checked;
      if (bad_pairs < 0 && square_pair_count(n, 2) % 2 == 0) bad_pairs = n;
      if (bad_factor < 0 && !is_prime_times_square(n)) bad_factor = n;
      if (bad_pairs >= 0 && bad_factor >= 0) break;
    }
    out.push_back(make_report(
        "l3.class3mod8-pair-parity", bad_pairs < 0,
        bad_pairs < 0 ? std::to_string(checked) + " members checked"
                      : "even pair count at " + std::to_string(bad_pairs),
        ms()));
    out.push_back(make_report(
        "l3.class3mod8-prime-square", bad_factor < 0,
        bad_factor < 0 ? std::to_string(checked) + " members factored"
                       : "not prime times square: " + std::to_string(bad_factor),
        ms()));
  }

  // (iv) sampled members 11 mod 24: three-squares count is 3x the
  // restricted-triple count, and membership matches the triple parity
  {
    int64_t sampled = 0;
    int64_t bad = -1;
    std::ostringstream detail;
    for (int64_t n = 11; n < n_max && sampled < opts.triple_samples; n += 24) {
      const int64_t triples = residue_triple_count(n);
      const int64_t squares = square_triple_count(n);
      const bool in_b = inv.coeff_at(n) == 1;
      if (squares != 3 * triples || in_b != (triples % 2 == 1)) {
        bad = n;
        break;
      }
      ++sampled;
      // thin the sampling as n grows
      n += 24 * (n / 50);
    }
    out.push_back(make_report(
        "l3.triple-ratio", bad < 0,
        bad < 0 ? std::to_string(sampled) + " sampled members verified"
                : "ratio broken at " + std::to_string(bad),
        ms()));
  }

  // (v) descriptive only: members in the complement classes per height
  {
    std::ostringstream os;
    os << "members in classes 0 mod 2, 1 mod 4, 3 mod 8 below x:";
    for (int64_t x = 1 << 12; x <= n_max; x *= 4) {
      int64_t c = 0;
      for (int64_t n : members) {
        if (n < 0 || n >= x) continue;
        if (n % 2 == 0 || n % 4 == 1 || n % 8 == 3) ++c;
      }
      os << " (" << x << ", " << c << ")";
    }
    out.push_back(CheckReport{"l3.density-curve", "descriptive", "pass",
                              os.str(), ms()});
  }

  return out;
}

CheckReport partition_parity_check(int64_t k_max) {
  const auto t0 = std::chrono::steady_clock::now();
  const int64_t E = 24 * k_max + 8;
  const Series a = theta_series(3, 1, E);
  const Series g = a.add(a.pow(4));
  const Series inv = g.inverse();

  // partition parity by the pentagonal-number recurrence
  std::vector<char> parity(static_cast<std::size_t>(k_max) + 1, 0);
  parity[0] = 1;
  std::vector<int64_t> pents;  // generalized pentagonal numbers
  for (int64_t k = 1;; ++k) {
    const int64_t p1 = k * (3 * k - 1) / 2;
    const int64_t p2 = k * (3 * k + 1) / 2;
    if (p1 > k_max && p2 > k_max) break;
    if (p1 <= k_max) pents.push_back(p1);
    if (p2 <= k_max) pents.push_back(p2);
  }
  std::sort(pents.begin(), pents.end());
  for (int64_t n = 1; n <= k_max; ++n) {
    char acc = 0;
    for (int64_t p : pents) {
      if (p > n) break;
      acc ^= parity[static_cast<std::size_t>(n - p)];
    }
    parity[static_cast<std::size_t>(n)] = acc;
  }

  // support of a + a^4 below 10^4 must be 1 + 24 * generalized pentagonals
  {
    const int64_t cap = std::min<int64_t>(10000, g.bound());
    std::vector<int64_t> expected;
    expected.push_back(1);  // s = 0
    for (int64_t k = 1;; ++k) {
      const int64_t p1 = k * (3 * k - 1) / 2;
      const int64_t p2 = k * (3 * k + 1) / 2;
      if (1 + 24 * p1 >= cap && 1 + 24 * p2 >= cap) break;
      if (1 + 24 * p1 < cap) expected.push_back(1 + 24 * p1);
      if (1 + 24 * p2 < cap) expected.push_back(1 + 24 * p2);
    }
    std::sort(expected.begin(), expected.end());
    if (g.support(0, cap) != expected) {
      return CheckReport{
          "partition.parity", "numeric", "fail",
          "support of a + a^4 is not the shifted pentagonal set",
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - t0)
              .count()};
    }
  }

  for (int64_t k = 1; k <= k_max; ++k) {
    const bool member = inv.coeff_at(24 * k - 1) == 1;
    const bool odd = parity[static_cast<std::size_t>(k)] != 0;
    if (member != odd) {
      return CheckReport{
          "partition.parity", "numeric", "fail",
          "mismatch at k=" + std::to_string(k),
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - t0)
              .count()};
    }
  }
  return CheckReport{
      "partition.parity", "numeric", "pass",
      std::to_string(k_max) + " partition parities matched",
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count()};
}

}  // namespace theta2
