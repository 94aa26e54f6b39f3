// Compiled with -mavx2; only reached through the dispatcher after a CPUID check.
#include "simconj/kernels.hpp"

#include <immintrin.h>

namespace simconj::kernels::avx2 {

namespace {

// 32 lanes of a[i] == b[i] as a 32-bit mask in lane order.
inline std::uint32_t eq_mask32(const std::uint16_t* a, const std::uint16_t* b) {
  const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 16));
  const __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 16));
  const __m256i c0 = _mm256_cmpeq_epi16(a0, b0);
  const __m256i c1 = _mm256_cmpeq_epi16(a1, b1);
  // packs interleaves 128-bit halves; permute restores element order.
  const __m256i packed = _mm256_permute4x64_epi64(_mm256_packs_epi16(c0, c1), 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

}  // namespace

void equal_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::uint64_t* out) {
  const std::size_t full = n / 64;
  for (std::size_t w = 0; w < full; ++w) {
    const std::size_t i = w * 64;
    const std::uint64_t lo = eq_mask32(a + i, b + i);
    const std::uint64_t hi = eq_mask32(a + i + 32, b + i + 32);
    out[w] = lo | (hi << 32);
  }
  if (full * 64 < n) scalar::equal_mask(a + full * 64, b + full * 64, n - full * 64, out + full);
}

std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) count += static_cast<std::size_t>(_mm_popcnt_u32(eq_mask32(a + i, b + i)));
  return count + scalar::count_equal(a + i, b + i, n - i);
}

void and_words(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_and_si256(va, vb));
  }
  scalar::and_words(a + i, b + i, out + i, words - i);
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t count = 0;
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_and_si256(va, vb));
    count += static_cast<std::size_t>(_mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) +
                                      _mm_popcnt_u64(lanes[2]) + _mm_popcnt_u64(lanes[3]));
  }
  return count + scalar::and_popcount(a + i, b + i, words - i);
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  return scalar::is_subset(a + i, b + i, words - i);
}

}  // namespace simconj::kernels::avx2
