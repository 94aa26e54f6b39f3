#pragma once

// The generating functions A_G(t) (all tuples) and B_G(t) (commuting tuples).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simconj/analysis.hpp"
#include "simconj/rational_gf.hpp"

namespace simconj {

RationalGF a_from_class_data(const ClassData& data, std::size_t order);
RationalGF a_of_t(const GroupTable& g);

// (1/|G|) sum_g |Z_G(g)|^n, i.e. the sum over classes of |Z_G(x)|^(n-1).
Integer alpha_coefficient(const GroupTable& g, std::size_t n);
Integer alpha_coefficient(const ClassData& data, std::size_t n);

// When a centralizer's fingerprint matches one already solved in another
// group, the cached B is reused only as the policy allows.
enum class FingerprintPolicy {
  never,          // always recompute
  abelian_only,   // reuse for abelian groups (where B depends on the order alone)
  always,         // trust the fingerprint
};

struct BOptions {
  FingerprintPolicy policy = FingerprintPolicy::abelian_only;
  std::size_t max_depth = 64;
};

struct BStats {
  std::size_t nodes = 0;          // groups whose class data was computed
  std::size_t local_hits = 0;     // centralizer already seen in the same parent
  std::size_t fingerprint_hits = 0;
  std::size_t abelian_leaves = 0;
  std::size_t max_depth = 0;
  std::uint64_t elements = 0;     // group elements touched, summed over nodes and leaves
};

// B_G(t) via (1 - |Z| t) B_G = 1 + t * sum over non-central classes of B_{Z_G(x)}.
RationalGF b_of_t(const GroupTable& g, const BOptions& options = {}, BStats* stats = nullptr);

Integer beta_coefficient(const GroupTable& g, std::size_t n);

inline RationalGF normalize(const RationalGF& f, std::size_t order) { return f.normalized(Rational(static_cast<unsigned long>(order))); }

bool a_equivalent(const GroupTable& g, const GroupTable& h);
bool b_equivalent(const GroupTable& g, const GroupTable& h);

// Drops the process-wide cross-group B cache.
void clear_b_cache();

}  // namespace simconj
