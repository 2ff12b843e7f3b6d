#include "clmul.hpp"

#include <algorithm>
#include <cstring>
#include <vector>

namespace theta2 {

namespace detail {

void clmul64_soft(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi) {
  using u128 = unsigned __int128;
  u128 tab[16];
  tab[0] = 0;
  tab[1] = a;
  for (int d = 2; d < 16; d += 2) {
    tab[d] = tab[d >> 1] << 1;
    tab[d + 1] = tab[d] ^ a;
  }
  u128 acc = 0;
  for (int s = 0; s < 64; s += 4) {
    acc ^= tab[(b >> s) & 15] << s;
  }
  lo = static_cast<uint64_t>(acc);
  hi = static_cast<uint64_t>(acc >> 64);
}

void clmul_schoolbook_soft(const uint64_t* a, std::size_t na, const uint64_t* b,
                           std::size_t nb, uint64_t* out) {
  std::memset(out, 0, (na + nb) * sizeof(uint64_t));
  using u128 = unsigned __int128;
  for (std::size_t i = 0; i < na; ++i) {
    const uint64_t ai = a[i];
    if (ai == 0) continue;
    u128 tab[16];
    tab[0] = 0;
    tab[1] = ai;
    for (int d = 2; d < 16; d += 2) {
      tab[d] = tab[d >> 1] << 1;
      tab[d + 1] = tab[d] ^ ai;
    }
    for (std::size_t j = 0; j < nb; ++j) {
      const uint64_t bj = b[j];
      if (bj == 0) continue;
      u128 acc = 0;
      for (int s = 0; s < 64; s += 4) {
        acc ^= tab[(bj >> s) & 15] << s;
      }
      out[i + j] ^= static_cast<uint64_t>(acc);
      out[i + j + 1] ^= static_cast<uint64_t>(acc >> 64);
    }
  }
}

}  // namespace detail

#if defined(THETA2_PCLMUL_KERNEL)
namespace detail {
void clmul_schoolbook_pclmul(const uint64_t* a, std::size_t na,
                             const uint64_t* b, std::size_t nb, uint64_t* out);
}
#endif

namespace {

using SchoolbookFn = void (*)(const uint64_t*, std::size_t, const uint64_t*,
                              std::size_t, uint64_t*);

SchoolbookFn pick_schoolbook() {
#if defined(THETA2_PCLMUL_KERNEL)
#if defined(__GNUC__) && (defined(__x86_64__) || defined(__i386__))
  if (__builtin_cpu_supports("pclmul")) return detail::clmul_schoolbook_pclmul;
#endif
#endif
  return detail::clmul_schoolbook_soft;
}

SchoolbookFn g_schoolbook = pick_schoolbook();

constexpr std::size_t kKaratsubaThreshold = 24;  // words

// Balanced GF(2) Karatsuba; additions are XOR so no carry handling anywhere.
// out has 2n words; scratch provides at least 6n words.
void kara(const uint64_t* a, const uint64_t* b, std::size_t n, uint64_t* out,
          uint64_t* scratch) {
  if (n <= kKaratsubaThreshold) {
    g_schoolbook(a, n, b, n, out);
    return;
  }
  const std::size_t h = (n + 1) / 2;  // low half size; high half n-h <= h
  const std::size_t hi_n = n - h;

  uint64_t* ta = scratch;            // h words
  uint64_t* tb = scratch + h;        // h words
  uint64_t* tz = scratch + 2 * h;    // 2h words
  uint64_t* zc = scratch + 4 * h;    // 2h words: saved z0 ^ z2 correction
  uint64_t* rest = scratch + 6 * h;  // recursion scratch

  // z0 = a_lo * b_lo into out[0 .. 2h)
  kara(a, b, h, out, rest);
  // z2 = a_hi * b_hi into out[2h .. 2h+2hi_n)
  if (hi_n > 0) {
    kara(a + h, b + h, hi_n, out + 2 * h, rest);
  }
  std::memset(out + 2 * h + 2 * hi_n, 0,
              (2 * n - 2 * h - 2 * hi_n) * sizeof(uint64_t));

  // Snapshot the z0 ^ z2 correction before the overlapping xor below
  // clobbers the regions it reads from.
  for (std::size_t i = 0; i < 2 * h; ++i) {
    zc[i] = out[i] ^ (i < 2 * hi_n ? out[2 * h + i] : 0);
  }

  // z1 = (a_lo ^ a_hi)(b_lo ^ b_hi), xored in at offset h with the correction
  for (std::size_t i = 0; i < h; ++i) {
    ta[i] = a[i] ^ (i < hi_n ? a[h + i] : 0);
    tb[i] = b[i] ^ (i < hi_n ? b[h + i] : 0);
  }
  kara(ta, tb, h, tz, rest);
  for (std::size_t i = 0; i < 2 * h; ++i) {
    out[h + i] ^= tz[i] ^ zc[i];
  }
}

}  // namespace

bool clmul_uses_pclmul() {
  return g_schoolbook != static_cast<SchoolbookFn>(detail::clmul_schoolbook_soft);
}

void clmul_words(const uint64_t* a, std::size_t na, const uint64_t* b,
                 std::size_t nb, uint64_t* out) {
  if (na == 0 || nb == 0) {
    std::memset(out, 0, (na + nb) * sizeof(uint64_t));
    return;
  }
  if (std::min(na, nb) <= kKaratsubaThreshold) {
    g_schoolbook(a, na, b, nb, out);
    return;
  }
  const std::size_t n = std::max(na, nb);
  std::vector<uint64_t> pa(n, 0), pb(n, 0), prod(2 * n, 0), scratch(8 * n, 0);
  std::memcpy(pa.data(), a, na * sizeof(uint64_t));
  std::memcpy(pb.data(), b, nb * sizeof(uint64_t));
  kara(pa.data(), pb.data(), n, prod.data(), scratch.data());
  std::memcpy(out, prod.data(), (na + nb) * sizeof(uint64_t));
}

}  // namespace theta2
