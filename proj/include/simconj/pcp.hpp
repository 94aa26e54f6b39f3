#pragma once

// Power-commutator presentations and their compilation to group tables.
//
// Generators g_0..g_{d-1} have relative orders r_i. Every element has a unique
// normal form g_0^e_0 ... g_{d-1}^e_{d-1} with 0 <= e_i < r_i, written as an
// exponent vector. The presentation supplies
//   g_i^{r_i}   = power_word(i)        (generators > i only)
//   [g_j, g_i]  = commutator_word(j,i) (generators > i only), j > i,
// with [a, b] = a^-1 b^-1 a b. Missing words are the identity.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "simconj/group_table.hpp"

namespace simconj {

using ExponentVector = std::vector<int>;

struct PcPresentation {
  // 0 when the relative orders are powers of different primes.
  int prime = 0;
  std::vector<int> relative_orders;
  std::vector<ExponentVector> power_words;
  // Row-major d x d; entry j * d + i holds [g_j, g_i] for j > i.
  std::vector<ExponentVector> commutator_words;
  std::string label;

  PcPresentation() = default;
  PcPresentation(std::vector<int> orders, int p, std::string name = {});

  std::size_t size() const { return relative_orders.size(); }
  std::uint64_t order() const;

  // Sparse word from (generator, exponent) pairs listed in increasing generator order.
  ExponentVector word(std::initializer_list<std::pair<int, int>> letters) const;

  void set_power(std::size_t i, ExponentVector w);
  void set_commutator(std::size_t j, std::size_t i, ExponentVector w);
  const ExponentVector& power(std::size_t i) const { return power_words[i]; }
  const ExponentVector& commutator(std::size_t j, std::size_t i) const {
    return commutator_words[j * size() + i];
  }

  // Throws InconsistentPresentation when shapes, exponent ranges or the
  // weight ordering are violated.
  void validate() const;
};

struct PcpOptions {
  std::size_t rewrite_budget = 1'000'000;
  std::size_t order_cap = kDefaultOrderCap;
};

// Collection from the left over a fixed presentation.
class Collector {
 public:
  explicit Collector(const PcPresentation& pcp, std::size_t rewrite_budget = 1'000'000);

  // x := x * g_gen, returned in normal form.
  void times_generator(ExponentVector& x, std::size_t gen) const;
  ExponentVector multiply(const ExponentVector& x, const ExponentVector& y) const;

  std::size_t index_of(const ExponentVector& x) const;
  ExponentVector exponents_of(std::size_t index) const;

 private:
  void collect(ExponentVector& x, std::vector<int>& stack) const;

  const PcPresentation& pcp_;
  std::size_t budget_;
  std::vector<std::vector<int>> power_letters_;
  std::vector<std::vector<int>> comm_letters_;
};

// Elements are indexed lexicographically by exponent vector (g_0 most
// significant), so the identity is index 0 and g_i is the i-th unit vector.
GroupTable build_from_pcp(const PcPresentation& pcp, const PcpOptions& options = {});

}  // namespace simconj
