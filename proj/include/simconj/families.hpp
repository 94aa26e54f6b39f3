#pragma once

// Stem groups of the rank <= 5 isoclinism families and a catalog of small named groups.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simconj/family_id.hpp"
#include "simconj/group_table.hpp"
#include "simconj/pcp.hpp"

namespace simconj {

struct StructureFingerprint {
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t nilpotency_class = 0;
  bool abelian_maximal_subgroup = false;

  friend bool operator==(const StructureFingerprint&, const StructureFingerprint&) = default;
};

std::string to_string(const StructureFingerprint& fp);

// Fingerprint of a p-group (the abelian-maximal-subgroup flag needs p).
StructureFingerprint compute_fingerprint(const GroupTable& g, int p);

enum class Route { permutation, pcp };

struct FamilySpec {
  Family family;
  int p;
  std::size_t order;
  Route route;
  StructureFingerprint expected;
};

// Throws InvalidParameters unless the pair is admissible: Gamma with p = 2,
// Phi with p in {3, 5}, abelian with any prime.
FamilySpec family_spec(Family family, int p);
PcPresentation family_presentation(Family family, int p);

// Built once per (family, p) and checked against the expected fingerprint;
// FingerprintMismatch signals a catalog bug.
std::shared_ptr<const GroupTable> stem_group(Family family, int p);

GroupTable cyclic(std::size_t n);
GroupTable abelian(const std::vector<std::size_t>& invariants);
GroupTable elementary_abelian(int p, int k);
// Dihedral group of the given order (order >= 6, even).
GroupTable dihedral(std::size_t order);
// Generalized quaternion and semidihedral groups of order 2^n.
GroupTable quaternion(std::size_t order);
GroupTable semidihedral(std::size_t order);
GroupTable symmetric(int degree);
GroupTable alternating(int degree);

// Dispatch by name: cyclic [n], abelian [invariants...], elementary_abelian [p, k],
// dihedral [order], quaternion [order], semidihedral [order], symmetric [degree],
// alternating [degree].
GroupTable named_group(const std::string& name, const std::vector<std::size_t>& params);

struct CatalogEntry {
  std::string name;
  std::size_t order;
  std::function<GroupTable()> build;
};

// Small named groups used across the test suite, in ascending order.
const std::vector<CatalogEntry>& small_catalog();
std::vector<CatalogEntry> catalog_up_to(std::size_t max_order);
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace simconj
