#pragma once

#include <cstddef>
#include <cstdint>

namespace theta2 {

// Carryless (GF(2)[x]) product of two word vectors.  out must hold na+nb
// words and is overwritten.  Subquadratic: Karatsuba over a word-level
// kernel, with a PCLMUL fast path selected at runtime when the CPU has it.
void clmul_words(const uint64_t* a, std::size_t na, const uint64_t* b,
                 std::size_t nb, uint64_t* out);

// true if the PCLMUL kernel is in use (exposed for tests/benchmarks)
bool clmul_uses_pclmul();

namespace detail {
// Portable 64x64 -> 128 carryless multiply, 4-bit windowed.
void clmul64_soft(uint64_t a, uint64_t b, uint64_t& lo, uint64_t& hi);
// Schoolbook word-level product (always available; the Karatsuba base case).
void clmul_schoolbook_soft(const uint64_t* a, std::size_t na, const uint64_t* b,
                           std::size_t nb, uint64_t* out);
}  // namespace detail

}  // namespace theta2
