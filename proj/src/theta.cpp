#include "theta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace theta2 {

namespace {

void require_odd_modulus(int64_t l) {
  if (l < 3 || l % 2 == 0)
    throw Error(ErrorKind::kUsage, "l must be an odd integer >= 3");
}

int64_t mod_pos(int64_t a, int64_t m) { return ((a % m) + m) % m; }

// Inverse of a mod m for gcd(a, m) = 1 (extended Euclid).
int64_t mod_inverse(int64_t a, int64_t m) {
  int64_t t = 0, nt = 1, r = m, nr = mod_pos(a, m);
  while (nr != 0) {
    const int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error(ErrorKind::kUsage, "index not invertible mod l");
  return mod_pos(t, m);
}

}  // namespace

int64_t normalize_index(int64_t l, int64_t i) {
  require_odd_modulus(l);
  const int64_t r = mod_pos(i, l);
  return std::min(r, l - r);
}

int64_t half_index(int64_t l, int64_t i) {
  // 2h = i (mod l), i.e. h = i*(l+1)/2 mod l
  return normalize_index(l, i * ((l + 1) / 2));
}

Series theta_series(int64_t l, int64_t i, int64_t bound) {
  require_odd_modulus(l);
  if (bound < 1) throw Error(ErrorKind::kUsage, "bound must be >= 1");
  const int64_t in = normalize_index(l, i);
  std::vector<int64_t> support;
  if (in == 0) {
    support.push_back(0);
  } else {
    for (int64_t n = in; n * n < bound; n += l) support.push_back(n * n);
    for (int64_t n = l - in; n * n < bound; n += l) support.push_back(n * n);
  }
  return Series::from_support(support, bound);
}

std::vector<int64_t> b_set(const Series& g, int64_t n_max) {
  if (g.is_zero())
    throw Error(ErrorKind::kDivisionByZero, "division by zero series");
  const Series inv = g.inverse();
  if (inv.bound() < n_max) {
    std::ostringstream os;
    os << "b_set to " << n_max << " needs the input known to E="
       << (n_max + 2 * g.valuation()) << " (have " << g.bound() << ")";
    throw Error(ErrorKind::kPrecision, os.str());
  }
  return inv.support(inv.valuation(), n_max);
}

std::vector<int64_t> exceptional_set(int64_t l) {
  require_odd_modulus(l);
  const int64_t m = l / 2;
  std::set<int64_t> out;
  for (int64_t r = 1; r <= m; ++r) {
    if (std::gcd(r, l) != 1) continue;
    // negative window of 1/[r] is contained in [-r^2, 0)
    const Series theta = theta_series(l, r, 2 * r * r + 1);
    const Series inv = theta.inverse();
    for (int64_t k : inv.support(inv.valuation(), 0)) out.insert(k);
  }
  return {out.begin(), out.end()};
}

std::set<CongruenceClass> basic_classes(int64_t l) {
  std::set<CongruenceClass> out;
  for (int64_t k : exceptional_set(l)) {
    int64_t q = 1;
    while ((-k) % (2 * q) == 0) q *= 2;
    const int64_t mod = 8 * q;
    out.insert({mod_pos(k, mod), mod});
  }
  return out;
}

namespace {

// Residues mod M covered by the basic classes (M a common multiple).
std::vector<bool> covered_mod(const std::set<CongruenceClass>& basics,
                              int64_t M) {
  std::vector<bool> covered(M, false);
  for (const auto& c : basics) {
    for (int64_t x = c.residue; x < M; x += c.modulus) covered[x] = true;
  }
  return covered;
}

}  // namespace

int64_t covered_residue_count(int64_t l, int64_t modulus) {
  const auto covered = covered_mod(basic_classes(l), modulus);
  return std::count(covered.begin(), covered.end(), true);
}

std::set<CongruenceClass> ustar_classes(int64_t l) {
  const auto basics = basic_classes(l);
  int64_t M = 8;
  for (const auto& c : basics) M = std::max(M, c.modulus);
  if (M > (int64_t{1} << 30))
    throw Error(ErrorKind::kUsage, "basic-class moduli too large");
  const auto covered = covered_mod(basics, M);

  // Greedy coarsest-modulus merge: emit (j, 2^s) when the whole dyadic block
  // avoids the basic classes and is not inside an already-emitted class.
  std::set<CongruenceClass> out;
  std::vector<bool> emitted(M, false);
  for (int64_t q = 2; q <= M; q *= 2) {
    for (int64_t j = 0; j < q; ++j) {
      bool fresh = false, clean = true;
      for (int64_t x = j; x < M; x += q) {
        if (covered[x]) {
          clean = false;
          break;
        }
        if (!emitted[x]) fresh = true;
      }
      if (clean && fresh) {
        out.insert({j, q});
        for (int64_t x = j; x < M; x += q) emitted[x] = true;
      }
    }
  }
  return out;
}

int64_t density_count(int64_t l, int64_t r, const CongruenceClass& cls,
                      int64_t X, const RunConfig& cfg) {
  require_odd_modulus(l);
  const int64_t rn = normalize_index(l, r);
  if (rn == 0 || std::gcd(rn, l) != 1)
    throw Error(ErrorKind::kUsage, "r must be prime to l");
  const int64_t q = cls.modulus;
  if (q <= 0 || (q & (q - 1)) != 0)
    throw Error(ErrorKind::kUsage, "class modulus must be a power of 2");
  if (X <= 0) throw Error(ErrorKind::kUsage, "count must be positive");

  // CRT: n = -r^2 (mod l), n = residue (mod q); gcd(l, q) = 1.
  const int64_t r2 = rn * rn;
  const int64_t step = l * q;
  // n = -r2 + l*t with l*t = residue + r2 (mod q)
  const int64_t t0 = mod_pos((cls.residue + r2) % q * mod_inverse(l, q), q);
  int64_t n0 = -r2 + l * t0;  // smallest solution >= -r2
  const int64_t last = n0 + (X - 1) * step;

  const int64_t needed_E = last + 2 * r2 + 1;
  if (needed_E > cfg.e_max || needed_E > cfg.memory_bytes) {
    std::ostringstream os;
    os << "density count needs E=" << needed_E
       << " which exceeds the configured ceiling";
    throw Error(ErrorKind::kBudget, os.str());
  }

  const Series inv = theta_series(l, rn, needed_E).inverse();
  int64_t count = 0;
  for (int64_t n = n0; n <= last; n += step) count += inv.coeff_at(n);
  return count;
}

}  // namespace theta2
