// PCLMUL kernel, isolated so only this translation unit needs -mpclmul.
// The dispatcher in clmul.cpp checks cpu support before calling in.
#if defined(THETA2_PCLMUL_KERNEL)

#include <immintrin.h>
#include <wmmintrin.h>

#include <cstddef>
#include <cstdint>
#include <cstring>

namespace theta2 {
namespace detail {

void clmul_schoolbook_pclmul(const uint64_t* a, std::size_t na,
                             const uint64_t* b, std::size_t nb, uint64_t* out) {
  std::memset(out, 0, (na + nb) * sizeof(uint64_t));
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    for (std::size_t j = 0; j < nb; ++j) {
      if (b[j] == 0) continue;
      const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
      out[i + j] ^= static_cast<uint64_t>(_mm_cvtsi128_si64(prod));
      out[i + j + 1] ^= static_cast<uint64_t>(
          _mm_cvtsi128_si64(_mm_unpackhi_epi64(prod, prod)));
    }
  }
}

}  // namespace detail
}  // namespace theta2

#endif  // THETA2_PCLMUL_KERNEL
