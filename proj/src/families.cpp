#include "simconj/families.hpp"

#include <map>
#include <mutex>

#include "simconj/analysis.hpp"
#include "simconj/closed_forms.hpp"

namespace simconj {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::invalid_parameters, what); }

GroupTable labelled(GroupTable g, std::string label) {
  g.set_label(std::move(label));
  return g;
}

// Rotation i -> i+1 and reflection i -> -i on the n-gon.
GroupTable dihedral_perm(std::size_t n, std::string label) {
  Permutation rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    ref[i] = static_cast<int>((n - i) % n);
  }
  return build_from_permutations({rot, ref}, BuildOptions{kDefaultOrderCap, std::move(label)});
}

PcPresentation heisenberg_pcp(int p) {
  // a, b, c with [b, a] = c central
  PcPresentation pc({p, p, p}, p, "Phi2");
  pc.set_commutator(1, 0, pc.word({{2, 1}}));
  return pc;
}

// alpha, alpha_1 .. alpha_{k}: [alpha_i, alpha] = alpha_{i+1}
PcPresentation maximal_class_chain(int p, int k, std::string label) {
  PcPresentation pc(std::vector<int>(static_cast<std::size_t>(k) + 1, p), p, std::move(label));
  for (int i = 1; i < k; ++i) pc.set_commutator(static_cast<std::size_t>(i), 0, pc.word({{i + 1, 1}}));
  return pc;
}

GroupTable sl23() {
  // SL(2,3) acting on the eight nonzero vectors of F_3^2.
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x || y) vecs.emplace_back(x, y);
    }
  }
  auto act = [&](int a, int b, int c, int d) {
    Permutation perm(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const auto [x, y] = vecs[i];
      const std::pair<int, int> img{(a * x + b * y) % 3, (c * x + d * y) % 3};
      for (std::size_t j = 0; j < vecs.size(); ++j) {
        if (vecs[j] == img) perm[i] = static_cast<int>(j);
      }
    }
    return perm;
  };
  return build_from_permutations({act(1, 1, 0, 1), act(1, 0, 1, 1)}, BuildOptions{kDefaultOrderCap, "SL(2,3)"});
}

// x -> x + 1 and x -> a x on Z_n (n prime, a of the given multiplicative order).
GroupTable affine(int n, int a, std::string label) {
  Permutation shift(static_cast<std::size_t>(n)), mul(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    shift[static_cast<std::size_t>(i)] = (i + 1) % n;
    mul[static_cast<std::size_t>(i)] = (a * i) % n;
  }
  return build_from_permutations({shift, mul}, BuildOptions{kDefaultOrderCap, std::move(label)});
}

GroupTable from_pcp(PcPresentation pc, std::string label) {
  pc.label = std::move(label);
  return build_from_pcp(pc);
}

}  // namespace

std::string to_string(const StructureFingerprint& fp) {
  return "(|Z|=" + std::to_string(fp.center_order) + ", |G'|=" + std::to_string(fp.derived_order) +
         ", class=" + std::to_string(fp.nilpotency_class) +
         ", abelian_max=" + (fp.abelian_maximal_subgroup ? "true" : "false") + ")";
}

StructureFingerprint compute_fingerprint(const GroupTable& g, int p) {
  StructureFingerprint fp;
  fp.center_order = center(g).order();
  fp.derived_order = derived_subgroup(g).order();
  fp.nilpotency_class = nilpotency_class(g).value_or(0);
  fp.abelian_maximal_subgroup = g.order() > 1 && has_abelian_maximal_subgroup(g, p);
  return fp;
}

FamilySpec family_spec(Family family, int p) {
  if (!is_prime(p)) bad("p = " + std::to_string(p) + " is not prime");
  if (is_gamma(family) && p != 2) bad(std::string(family_name(family)) + " is a family of 2-groups; p must be 2");
  if (is_phi(family) && p != 3 && p != 5) {
    bad(std::string(family_name(family)) + " stem groups are built for p in {3, 5} only (order cap)");
  }
  const auto q = static_cast<std::size_t>(p);
  auto fp = [&](int z, int d, std::size_t cls, bool am) {
    return StructureFingerprint{ipow(q, z), ipow(q, d), cls, am};
  };
  switch (family) {
    case Family::abelian: return {family, p, 1, Route::permutation, {1, 1, 0, false}};
    case Family::phi2: case Family::gamma2: return {family, p, ipow(q, 3), Route::pcp, fp(1, 1, 2, true)};
    case Family::phi3: return {family, p, ipow(q, 4), Route::pcp, fp(1, 2, 3, true)};
    case Family::gamma3: return {family, p, 16, Route::permutation, fp(1, 2, 3, true)};
    case Family::phi4: case Family::gamma4: return {family, p, ipow(q, 5), Route::pcp, fp(2, 2, 2, true)};
    case Family::phi5: case Family::gamma5: return {family, p, ipow(q, 5), Route::pcp, fp(1, 1, 2, false)};
    case Family::phi6: return {family, p, ipow(q, 5), Route::pcp, fp(2, 3, 3, false)};
    case Family::phi7: case Family::phi8: case Family::gamma6: case Family::gamma7:
      return {family, p, ipow(q, 5), Route::pcp, fp(1, 2, 3, false)};
    case Family::phi9: return {family, p, ipow(q, 5), Route::pcp, fp(1, 3, 4, true)};
    case Family::gamma8: return {family, p, 32, Route::permutation, fp(1, 3, 4, true)};
    case Family::phi10: return {family, p, ipow(q, 5), Route::pcp, fp(1, 3, 4, false)};
  }
  bad("unknown family");
}

PcPresentation family_presentation(Family family, int p) {
  const FamilySpec spec = family_spec(family, p);
  if (spec.route != Route::pcp) bad(std::string(family_name(family)) + " is built from permutations");
  const std::string label(family_name(family));
  switch (family) {
    case Family::phi2:
    case Family::gamma2: {
      auto pc = heisenberg_pcp(p);
      pc.label = label;
      return pc;
    }
    case Family::phi3: {
      auto pc = maximal_class_chain(p, 3, label);
      if (p == 3) pc.set_power(1, pc.word({{3, 2}}));
      return pc;
    }
    case Family::phi4: case Family::gamma4: {
      if (p == 2) {
        // beta, alpha_1, alpha_2 with beta alpha_i beta^-1 = alpha_i^-1, alpha_i of order 4
        PcPresentation pc({2, 4, 4}, 2, label);
        pc.set_commutator(1, 0, pc.word({{1, 2}}));
        pc.set_commutator(2, 0, pc.word({{2, 2}}));
        return pc;
      }
      // alpha, alpha_1, alpha_2, beta_1, beta_2 with [alpha_i, alpha] = beta_i
      PcPresentation pc({p, p, p, p, p}, p, label);
      pc.set_commutator(1, 0, pc.word({{3, 1}}));
      pc.set_commutator(2, 0, pc.word({{4, 1}}));
      return pc;
    }
    case Family::phi5: case Family::gamma5: {
      // alpha_1..alpha_4, beta: [alpha_2, alpha_1] = [alpha_4, alpha_3] = beta^-1
      PcPresentation pc({p, p, p, p, p}, p, label);
      if (p == 2) {
        pc.set_commutator(1, 0, pc.word({{4, 1}}));
        pc.set_commutator(3, 0, pc.word({{4, 1}}));
        pc.set_commutator(2, 1, pc.word({{4, 1}}));
      } else {
        pc.set_commutator(1, 0, pc.word({{4, p - 1}}));
        pc.set_commutator(3, 2, pc.word({{4, p - 1}}));
      }
      return pc;
    }
    case Family::phi6: {
      // alpha_1, alpha_2, beta, beta_1, beta_2: [alpha_2, alpha_1] = beta^-1, [beta, alpha_i] = beta_i
      PcPresentation pc({p, p, p, p, p}, p, label);
      pc.set_commutator(1, 0, pc.word({{2, p - 1}}));
      pc.set_commutator(2, 0, pc.word({{3, 1}}));
      pc.set_commutator(2, 1, pc.word({{4, 1}}));
      return pc;
    }
    case Family::phi7: {
      // alpha, alpha_1, alpha_2, alpha_3, beta
      PcPresentation pc({p, p, p, p, p}, p, label);
      pc.set_commutator(1, 0, pc.word({{2, 1}}));
      pc.set_commutator(2, 0, pc.word({{3, 1}}));
      pc.set_commutator(4, 1, pc.word({{3, p - 1}}));
      if (p == 3) pc.set_power(1, pc.word({{3, 2}}));
      return pc;
    }
    case Family::phi8: {
      // alpha_2 (order p^2), alpha_1, beta (order p^2): alpha_1^p = beta = [alpha_1, alpha_2], [beta, alpha_2] = beta^p
      PcPresentation pc({p * p, p, p * p}, p, label);
      pc.set_power(1, pc.word({{2, 1}}));
      pc.set_commutator(1, 0, pc.word({{2, 1}}));
      pc.set_commutator(2, 0, pc.word({{2, p}}));
      return pc;
    }
    case Family::phi9:
    case Family::phi10: {
      auto pc = maximal_class_chain(p, 4, label);
      if (family == Family::phi10) pc.set_commutator(2, 1, pc.word({{4, p - 1}}));
      if (p == 3) {
        pc.set_power(1, pc.word({{3, 2}, {4, 1}}));
        pc.set_power(2, pc.word({{4, 2}}));
      }
      return pc;
    }
    case Family::gamma6: {
      // beta_1, beta_2, alpha (order 8): alpha^beta_1 = alpha^-1, alpha^beta_2 = alpha^5
      PcPresentation pc({2, 2, 8}, 2, label);
      pc.set_commutator(2, 0, pc.word({{2, 6}}));
      pc.set_commutator(2, 1, pc.word({{2, 4}}));
      return pc;
    }
    case Family::gamma7: {
      // alpha (order 4), beta_3, beta_2, beta_1
      PcPresentation pc({4, 2, 2, 2}, 2, label);
      pc.set_commutator(1, 0, pc.word({{2, 1}, {3, 1}}));
      pc.set_commutator(2, 0, pc.word({{3, 1}}));
      return pc;
    }
    case Family::abelian:
    case Family::gamma3:
    case Family::gamma8: break;
  }
  bad("no presentation for " + label);
}

std::shared_ptr<const GroupTable> stem_group(Family family, int p) {
  const FamilySpec spec = family_spec(family, p);
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::shared_ptr<const GroupTable>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({family, p}); it != cache.end()) return it->second;
  }
  const std::string label = std::string(family_name(family)) + "(p=" + std::to_string(p) + ")";
  GroupTable g;
  if (family == Family::abelian) {
    g = labelled(cyclic(1), label);
  } else if (spec.route == Route::permutation) {
    g = dihedral_perm(spec.order / 2, label);
  } else {
    auto pc = family_presentation(family, p);
    pc.label = label;
    g = build_from_pcp(pc);
  }
  if (g.order() != spec.order) {
    throw Error(ErrorKind::fingerprint_mismatch, label + " has order " + std::to_string(g.order()));
  }
  const StructureFingerprint got = compute_fingerprint(g, p);
  if (!(got == spec.expected)) {
    throw Error(ErrorKind::fingerprint_mismatch, label + " expected " + to_string(spec.expected) + " got " + to_string(got));
  }
  auto shared = std::make_shared<const GroupTable>(std::move(g));
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(family, p), shared).first->second;
}

GroupTable cyclic(std::size_t n) {
  if (n == 0) bad("cyclic group needs n >= 1");
  Permutation perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>((i + 1) % n);
  return build_from_permutations({perm}, BuildOptions{kDefaultOrderCap, "C" + std::to_string(n)});
}

GroupTable abelian(const std::vector<std::size_t>& invariants) {
  if (invariants.empty()) return cyclic(1);
  GroupTable g = cyclic(invariants.front());
  std::string label = "C" + std::to_string(invariants.front());
  for (std::size_t i = 1; i < invariants.size(); ++i) {
    label += "xC" + std::to_string(invariants[i]);
    g = direct_product(g, cyclic(invariants[i]), label);
  }
  return g;
}

GroupTable elementary_abelian(int p, int k) {
  if (!is_prime(p) || k < 0) bad("elementary abelian group needs a prime p and k >= 0");
  if (k == 0) return cyclic(1);
  const std::string label = "E" + std::to_string(p) + "^" + std::to_string(k);
  return from_pcp(PcPresentation(std::vector<int>(static_cast<std::size_t>(k), p), p), label);
}

GroupTable dihedral(std::size_t order) {
  if (order < 6 || order % 2) bad("dihedral group needs an even order >= 6");
  return dihedral_perm(order / 2, "D" + std::to_string(order));
}

GroupTable quaternion(std::size_t order) {
  if (order < 8 || !is_power_of_two(order)) bad("generalized quaternion group needs order 2^n >= 8");
  const int n = log2_exact(order);
  const int r = 1 << (n - 1);
  // beta, alpha: beta^2 = alpha^{2^{n-2}}, alpha^beta = alpha^-1
  PcPresentation pc({2, r}, 2);
  pc.set_power(0, pc.word({{1, r / 2}}));
  pc.set_commutator(1, 0, pc.word({{1, r - 2}}));
  return from_pcp(pc, "Q" + std::to_string(order));
}

GroupTable semidihedral(std::size_t order) {
  if (order < 16 || !is_power_of_two(order)) bad("semidihedral group needs order 2^n >= 16");
  const int n = log2_exact(order);
  const int r = 1 << (n - 1);
  // alpha^beta = alpha^{2^{n-2} - 1}
  PcPresentation pc({2, r}, 2);
  pc.set_commutator(1, 0, pc.word({{1, r / 2 - 2}}));
  return from_pcp(pc, "SD" + std::to_string(order));
}

GroupTable symmetric(int degree) {
  if (degree < 1 || degree > 7) bad("symmetric group degree must be in 1..7");
  const auto d = static_cast<std::size_t>(degree);
  Permutation cycle(d), swap(d);
  for (std::size_t i = 0; i < d; ++i) {
    cycle[i] = static_cast<int>((i + 1) % d);
    swap[i] = static_cast<int>(i);
  }
  if (d > 1) std::swap(swap[0], swap[1]);
  return build_from_permutations({cycle, swap}, BuildOptions{kDefaultOrderCap, "S" + std::to_string(degree)});
}

GroupTable alternating(int degree) {
  if (degree < 1 || degree > 7) bad("alternating group degree must be in 1..7");
  const std::string label = "A" + std::to_string(degree);
  if (degree < 3) return labelled(cyclic(1), label);
  const auto d = static_cast<std::size_t>(degree);
  std::vector<Permutation> gens;
  Permutation three(d);
  for (std::size_t i = 0; i < d; ++i) three[i] = static_cast<int>(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  gens.push_back(three);
  if (degree > 3) {
    // (0 1 ... d-1) for odd d, (1 2 ... d-1) for even d
    Permutation cyc(d);
    for (std::size_t i = 0; i < d; ++i) cyc[i] = static_cast<int>(i);
    const std::size_t start = d % 2 ? 0 : 1;
    for (std::size_t i = start; i < d; ++i) cyc[i] = static_cast<int>(i + 1 < d ? i + 1 : start);
    gens.push_back(cyc);
  }
  return build_from_permutations(gens, BuildOptions{kDefaultOrderCap, label});
}

GroupTable named_group(const std::string& name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) bad(name + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cyclic") {
    need(1);
    return cyclic(params[0]);
  }
  if (name == "abelian") return abelian(params);
  if (name == "elementary_abelian") {
    need(2);
    return elementary_abelian(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (name == "dihedral") {
    need(1);
    return dihedral(params[0]);
  }
  if (name == "quaternion") {
    need(1);
    return quaternion(params[0]);
  }
  if (name == "semidihedral") {
    need(1);
    return semidihedral(params[0]);
  }
  if (name == "symmetric") {
    need(1);
    return symmetric(static_cast<int>(params[0]));
  }
  if (name == "alternating") {
    need(1);
    return alternating(static_cast<int>(params[0]));
  }
  bad("unknown named group '" + name + "'");
}

const std::vector<CatalogEntry>& small_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> c;
    auto add = [&](std::string name, std::size_t order, std::function<GroupTable()> build) {
      c.push_back(CatalogEntry{name, order, [name, build] { return labelled(build(), name); }});
    };
    add("C1", 1, [] { return cyclic(1); });
    add("C2", 2, [] { return cyclic(2); });
    add("C3", 3, [] { return cyclic(3); });
    add("C4", 4, [] { return cyclic(4); });
    add("C2xC2", 4, [] { return abelian({2, 2}); });
    add("C5", 5, [] { return cyclic(5); });
    add("C6", 6, [] { return cyclic(6); });
    add("S3", 6, [] { return symmetric(3); });
    add("C7", 7, [] { return cyclic(7); });
    add("C8", 8, [] { return cyclic(8); });
    add("C4xC2", 8, [] { return abelian({4, 2}); });
    add("C2^3", 8, [] { return elementary_abelian(2, 3); });
    add("D8", 8, [] { return dihedral(8); });
    add("Q8", 8, [] { return quaternion(8); });
    add("C9", 9, [] { return cyclic(9); });
    add("C3xC3", 9, [] { return abelian({3, 3}); });
    add("C10", 10, [] { return cyclic(10); });
    add("D10", 10, [] { return dihedral(10); });
    add("C12", 12, [] { return cyclic(12); });
    add("C6xC2", 12, [] { return abelian({6, 2}); });
    add("D12", 12, [] { return dihedral(12); });
    add("A4", 12, [] { return alternating(4); });
    add("Dic12", 12, [] {
      // x of order 4 inverting y of order 3
      PcPresentation pc({4, 3}, 0);
      pc.set_commutator(1, 0, pc.word({{1, 1}}));
      return build_from_pcp(pc);
    });
    add("C16", 16, [] { return cyclic(16); });
    add("C4xC4", 16, [] { return abelian({4, 4}); });
    add("C8xC2", 16, [] { return abelian({8, 2}); });
    add("C4xC2xC2", 16, [] { return abelian({4, 2, 2}); });
    add("C2^4", 16, [] { return elementary_abelian(2, 4); });
    add("D16", 16, [] { return dihedral(16); });
    add("SD16", 16, [] { return semidihedral(16); });
    add("Q16", 16, [] { return quaternion(16); });
    add("C2xD8", 16, [] { return direct_product(cyclic(2), dihedral(8)); });
    add("C2xQ8", 16, [] { return direct_product(cyclic(2), quaternion(8)); });
    add("Pauli", 16, [] {
      // X, Z of order 2 and a central i of order 4 with [Z, X] = i^2
      PcPresentation pc({2, 2, 4}, 2);
      pc.set_commutator(1, 0, pc.word({{2, 2}}));
      return build_from_pcp(pc);
    });
    add("M16", 16, [] {
      PcPresentation pc({2, 8}, 2);
      pc.set_commutator(1, 0, pc.word({{1, 4}}));
      return build_from_pcp(pc);
    });
    add("C4:C4", 16, [] {
      PcPresentation pc({4, 4}, 2);
      pc.set_commutator(1, 0, pc.word({{1, 2}}));
      return build_from_pcp(pc);
    });
    add("D18", 18, [] { return dihedral(18); });
    add("C3xS3", 18, [] { return direct_product(cyclic(3), symmetric(3)); });
    add("F20", 20, [] { return affine(5, 2, "F20"); });
    add("D20", 20, [] { return dihedral(20); });
    add("F21", 21, [] { return affine(7, 2, "F21"); });
    add("S4", 24, [] { return symmetric(4); });
    add("SL(2,3)", 24, [] { return sl23(); });
    add("D24", 24, [] { return dihedral(24); });
    add("C2xA4", 24, [] { return direct_product(cyclic(2), alternating(4)); });
    add("Heis27", 27, [] { return build_from_pcp(heisenberg_pcp(3)); });
    add("M27", 27, [] {
      PcPresentation pc({3, 9}, 3);
      pc.set_commutator(1, 0, pc.word({{1, 3}}));
      return build_from_pcp(pc);
    });
    add("C9xC3", 27, [] { return abelian({9, 3}); });
    add("D32", 32, [] { return dihedral(32); });
    add("SD32", 32, [] { return semidihedral(32); });
    add("Q32", 32, [] { return quaternion(32); });
    add("Gamma4a2", 32, [] { return *stem_group(Family::gamma4, 2); });
    add("Gamma5a1", 32, [] { return *stem_group(Family::gamma5, 2); });
    add("Gamma6a1", 32, [] { return *stem_group(Family::gamma6, 2); });
    add("Gamma7a1", 32, [] { return *stem_group(Family::gamma7, 2); });
    add("C2xD16", 32, [] { return direct_product(cyclic(2), dihedral(16)); });
    add("D64", 64, [] { return dihedral(64); });
    add("SD64", 64, [] { return semidihedral(64); });
    add("Q64", 64, [] { return quaternion(64); });
    add("D8xD8", 64, [] { return direct_product(dihedral(8), dihedral(8)); });
    return c;
  }();
  return catalog;
}

std::vector<CatalogEntry> catalog_up_to(std::size_t max_order) {
  std::vector<CatalogEntry> out;
  for (const auto& e : small_catalog()) {
    if (e.order <= max_order) out.push_back(e);
  }
  return out;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const auto& e : small_catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace simconj
