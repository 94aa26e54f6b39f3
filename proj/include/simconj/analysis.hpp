#pragma once

// Structural invariants of a group table.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "simconj/group_table.hpp"

namespace simconj {

struct ClassData {
  // Ordered by smallest element index; each class lists its elements ascending.
  std::vector<std::vector<Elem>> classes;
  std::vector<Elem> representatives;
  std::vector<std::uint64_t> centralizer_sizes;
  // m -> number of elements whose centralizer has order m
  std::map<std::uint64_t, std::uint64_t> z_histogram;
  // class sizes, ascending
  std::vector<std::uint64_t> class_equation;
  // element -> class index
  std::vector<std::uint32_t> class_of;

  std::size_t class_number() const { return classes.size(); }
  std::size_t center_size() const;
};

ClassData conjugacy_data(const GroupTable& g);

// {y : xy = yx}, computed as the equality mask of row x and column x.
ElementSet centralizer_set(const GroupTable& g, Elem x);
Subgroup centralizer(const GroupTable& g, Elem x);
std::size_t centralizer_size(const GroupTable& g, Elem x);

Subgroup center(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);
// <[a, b] : a in A, b in B>
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
// gamma_1 = G, gamma_{i+1} = [gamma_i, G], stopping at the first repeated term.
std::vector<Subgroup> lower_central_series(const GroupTable& g);
// Nilpotency class, or nullopt when the series stalls above the trivial group.
std::optional<std::size_t> nilpotency_class(const GroupTable& g);

bool is_abelian(const Subgroup& h);
bool is_ac_group(const GroupTable& g);

// m with |G| = p^m, or nullopt.
std::optional<int> prime_power_exponent(std::size_t order, int p);

// Frattini subgroup of a p-group: G' G^p.
Subgroup frattini_subgroup(const GroupTable& g, int p);
// All subgroups of index p of a p-group, as kernels of hyperplanes of G/Frattini.
std::vector<Subgroup> maximal_subgroups(const GroupTable& g, int p);
bool has_abelian_maximal_subgroup(const GroupTable& g, int p);

struct MaximalClassProfile {
  bool is_maximal_class = false;
  int p = 0;
  int m = 0;
  std::size_t nilpotency_class = 0;
  // P_0 = G, P_1 = centralizer of gamma_2 / gamma_4, P_i = gamma_i for i >= 2 (through P_m = 1).
  std::vector<Subgroup> p_series;
  bool p1_abelian = false;
  bool p1_p3_commute = false;
  bool degree_of_commutativity_positive = false;
  bool has_abelian_maximal_subgroup = false;
};

// Throws NotPrimePower if |G| is not a power of p and InvalidParameters if m < 4.
MaximalClassProfile maximal_class_profile(const GroupTable& g, int p);

}  // namespace simconj
