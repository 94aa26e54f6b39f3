#pragma once

// Isoclinism of two groups and the stem order of a group's family.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "simconj/group_table.hpp"

namespace simconj {

struct IsoclinismWitness {
  // theta on G/Z(G) -> H/Z(H), one pair of coset representatives per coset.
  std::vector<std::pair<Elem, Elem>> theta;
  // phi on G' -> H', one pair per element of G'.
  std::vector<std::pair<Elem, Elem>> phi;
};

struct IsoclinismOptions {
  std::size_t quotient_cap = 256;
  // Backtracking nodes before giving up; 0 means unlimited.
  std::size_t node_budget = 0;
};

struct IsoclinismStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
};

// A witness iff G and H are isoclinic. Throws QuotientTooLarge when |G/Z(G)|
// exceeds the cap.
std::optional<IsoclinismWitness> are_isoclinic(const GroupTable& g, const GroupTable& h,
                                               const IsoclinismOptions& options = {},
                                               IsoclinismStats* stats = nullptr);

// Checks that theta and phi are bijections and that phi([x, y]) = [theta x, theta y]
// for every pair of cosets.
bool verify_witness(const GroupTable& g, const GroupTable& h, const IsoclinismWitness& w);

// |G/Z(G)| * |Z(G) and G'|
std::size_t stem_order(const GroupTable& g);

}  // namespace simconj
