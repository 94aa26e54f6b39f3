#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "simconj/kernels.hpp"

namespace simconj {

// Fixed-size set of element indices backed by 64-bit words.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return size_; }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  ElementSet& operator&=(const ElementSet& other) {
    kernels::and_words(words_, other.words_, words_);
    return *this;
  }

  bool is_subset_of(const ElementSet& other) const { return kernels::is_subset(words_, other.words_); }
  std::size_t intersection_count(const ElementSet& other) const {
    return kernels::and_popcount(words_, other.words_);
  }

  std::vector<std::uint16_t> to_vector() const {
    std::vector<std::uint16_t> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<std::uint16_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace simconj
