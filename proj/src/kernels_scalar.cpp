#include "simconj/kernels.hpp"

#include <bit>

namespace simconj::kernels::scalar {

void equal_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::uint64_t* out) {
  const std::size_t words = (n + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = 0;
    const std::size_t base = w * 64;
    const std::size_t end = base + 64 < n ? base + 64 : n;
    for (std::size_t i = base; i < end; ++i) {
      bits |= static_cast<std::uint64_t>(a[i] == b[i]) << (i - base);
    }
    out[w] = bits;
  }
}

std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += a[i] == b[i];
  return count;
}

void and_words(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) out[i] = a[i] & b[i];
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < words; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

}  // namespace simconj::kernels::scalar
