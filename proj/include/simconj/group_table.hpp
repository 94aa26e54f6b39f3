#pragma once

// Fully materialized finite groups.
//
// Elements are indices 0..order-1 with the identity fixed at 0. The
// multiplication table is stored row-major together with its transpose so that
// both a*x and x*a are contiguous for a fixed a.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "simconj/bitset.hpp"
#include "simconj/error.hpp"

namespace simconj {

using Elem = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 10000;
inline constexpr std::size_t kFullAssociativityLimit = 256;
inline constexpr Elem kNoElement = 0xFFFF;

class GroupTable {
 public:
  GroupTable() = default;

  // Wraps a table without validating it. Inverses that do not exist are stored
  // as kNoElement; certify() reports them.
  static GroupTable from_raw(std::size_t order, std::vector<Elem> mul, std::vector<Elem> generators,
                             std::string label);

  std::size_t order() const { return order_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }

  // row(a)[x] = a*x, column(a)[x] = x*a
  std::span<const Elem> row(Elem a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  std::span<const Elem> column(Elem a) const {
    return {transposed_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

  // g x g^-1
  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  Elem power(Elem a, std::uint64_t k) const;
  std::size_t element_order(Elem a) const;
  bool is_abelian() const;

  const std::vector<Elem>& generators() const { return generators_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Distinct for every table constructed in this process; used as a memo key.
  std::uint64_t id() const { return id_; }

  const std::vector<Elem>& raw_table() const { return mul_; }

 private:
  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> transposed_;
  std::vector<Elem> inv_;
  std::vector<Elem> generators_;
  std::string label_;
  std::uint64_t id_ = 0;
};

// A subgroup of a parent table. The parent must outlive the subgroup.
class Subgroup {
 public:
  Subgroup(const GroupTable& parent, ElementSet members);

  const GroupTable& parent() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem x) const { return members_.contains(x); }
  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  const GroupTable* parent_;
  ElementSet members_;
  std::vector<Elem> elements_;
};

Subgroup whole_group(const GroupTable& g);
Subgroup trivial_subgroup(const GroupTable& g);

// Closure of `gens` (plus the identity) under multiplication.
Subgroup generate_subgroup(const GroupTable& g, std::span<const Elem> gens);
// Closure of a subset given as an ElementSet.
Subgroup generate_subgroup(const GroupTable& g, const ElementSet& gens);

// Greedy generating set: repeatedly adds the smallest element not yet reached.
std::vector<Elem> greedy_generators(const GroupTable& g, const ElementSet& members);

// The subgroup as an abstract group, re-indexed 0..|H|-1 in parent index order.
GroupTable induced_table(const Subgroup& h, std::string label = {});

// Direct product; element (a, b) gets index a * |H| + b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::string label = {});

// Permutation input. Images are 0-based: perm[i] is the image of point i.
using Permutation = std::vector<int>;

Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);

struct BuildOptions {
  std::size_t order_cap = kDefaultOrderCap;
  std::string label;
};

// Closure of the generators under composition (apply left factor first). Elements
// are indexed in BFS discovery order.
GroupTable build_from_permutations(const std::vector<Permutation>& gens, const BuildOptions& options = {});

// Validates the table as a group with identity 0; throws NotAGroup naming the
// first violated axiom and a witness.
GroupTable build_from_cayley(const std::vector<std::vector<int>>& table, const BuildOptions& options = {});

struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct CertificateReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(std::string_view name) const;
};

// Identity, inverses, cancellation, generation and associativity (exhaustive up
// to kFullAssociativityLimit, generator triples above it).
CertificateReport certify(const GroupTable& g);

}  // namespace simconj
