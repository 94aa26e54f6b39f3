#pragma once

// Data-parallel inner loops shared by the group algorithms.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The variant is chosen once at startup from CPUID and can be
// overridden with SIMCONJ_ISA=scalar|avx2 or set_isa() (tests use this to run
// both paths over the same inputs).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace simconj::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa active_isa();
// Throws std::invalid_argument when the ISA is not available on this CPU.
void set_isa(Isa isa);

// out bit i is set iff a[i] == b[i]. out must hold (a.size() + 63) / 64 words;
// bits past a.size() are cleared.
void equal_mask(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b,
                std::span<std::uint64_t> out);

std::size_t count_equal(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b);

// out[i] = a[i] & b[i]
void and_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
               std::span<std::uint64_t> out);

// popcount(a & b) without materializing the intersection.
std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// true iff (a & ~b) == 0, i.e. a is a subset of b.
bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

namespace scalar {
void equal_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::uint64_t* out);
std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
void and_words(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t words);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace scalar

#if defined(SIMCONJ_HAVE_AVX2)
namespace avx2 {
void equal_mask(const std::uint16_t* a, const std::uint16_t* b, std::size_t n, std::uint64_t* out);
std::size_t count_equal(const std::uint16_t* a, const std::uint16_t* b, std::size_t n);
void and_words(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out, std::size_t words);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace avx2
#endif

}  // namespace simconj::kernels
