#include "simconj/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace simconj::kernels {

namespace {

struct Table {
  Isa isa;
  void (*equal_mask)(const std::uint16_t*, const std::uint16_t*, std::size_t, std::uint64_t*);
  std::size_t (*count_equal)(const std::uint16_t*, const std::uint16_t*, std::size_t);
  void (*and_words)(const std::uint64_t*, const std::uint64_t*, std::uint64_t*, std::size_t);
  std::size_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
  bool (*is_subset)(const std::uint64_t*, const std::uint64_t*, std::size_t);
};

constexpr Table kScalar{Isa::scalar, scalar::equal_mask, scalar::count_equal, scalar::and_words,
                        scalar::and_popcount, scalar::is_subset};
#if defined(SIMCONJ_HAVE_AVX2)
constexpr Table kAvx2{Isa::avx2, avx2::equal_mask, avx2::count_equal, avx2::and_words,
                      avx2::and_popcount, avx2::is_subset};
#endif

const Table* table_for(Isa isa) {
#if defined(SIMCONJ_HAVE_AVX2)
  if (isa == Isa::avx2) return &kAvx2;
#endif
  (void)isa;
  return &kScalar;
}

const Table* initial_table() {
  Isa isa = isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  if (const char* env = std::getenv("SIMCONJ_ISA")) {
    const std::string want(env);
    if (want == "scalar") isa = Isa::scalar;
    else if (want == "avx2" && isa_supported(Isa::avx2)) isa = Isa::avx2;
  }
  return table_for(isa);
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{initial_table()};
  return table;
}

const Table& dispatch() { return *current().load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(SIMCONJ_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Isa active_isa() { return dispatch().isa; }

void set_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument("ISA not supported on this CPU: " + std::string(isa_name(isa)));
  current().store(table_for(isa), std::memory_order_relaxed);
}

void equal_mask(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b,
                std::span<std::uint64_t> out) {
  assert(a.size() == b.size() && out.size() >= (a.size() + 63) / 64);
  dispatch().equal_mask(a.data(), b.data(), a.size(), out.data());
}

std::size_t count_equal(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) {
  assert(a.size() == b.size());
  return dispatch().count_equal(a.data(), b.data(), a.size());
}

void and_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
               std::span<std::uint64_t> out) {
  assert(a.size() == b.size() && out.size() >= a.size());
  dispatch().and_words(a.data(), b.data(), out.data(), a.size());
}

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  return dispatch().and_popcount(a.data(), b.data(), a.size());
}

bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  return dispatch().is_subset(a.data(), b.data(), a.size());
}

}  // namespace simconj::kernels
