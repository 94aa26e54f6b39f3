#include "simconj/isoclinism.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "simconj/analysis.hpp"

namespace simconj {

namespace {

constexpr int kUnset = -1;

struct CentralQuotient {
  const GroupTable* g = nullptr;
  std::size_t q = 0;
  std::vector<int> coset_of;
  std::vector<Elem> reps;
  std::vector<int> mul;   // q x q
  std::vector<Elem> comm; // q x q, values in G'
  // per coset: order in G/Z, centralizer order in G/Z, |[x, G]|
  std::vector<std::array<std::size_t, 3>> invariant;
  std::size_t derived_order = 0;
  ElementSet derived;

  int m(int a, int b) const { return mul[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)]; }
  Elem c(int a, int b) const { return comm[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)]; }
};

CentralQuotient central_quotient(const GroupTable& g, std::size_t cap) {
  CentralQuotient cq;
  cq.g = &g;
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  cq.derived = d.members();
  cq.derived_order = d.order();
  const std::size_t n = g.order();
  cq.q = n / z.order();
  if (cq.q > cap) {
    throw Error(ErrorKind::quotient_too_large, "|G/Z(G)| = " + std::to_string(cq.q) + " exceeds the cap " + std::to_string(cap));
  }
  cq.coset_of.assign(n, kUnset);
  for (std::size_t x = 0; x < n; ++x) {
    if (cq.coset_of[x] != kUnset) continue;
    const int id = static_cast<int>(cq.reps.size());
    cq.reps.push_back(static_cast<Elem>(x));
    for (Elem zz : z.elements()) cq.coset_of[g.mul(static_cast<Elem>(x), zz)] = id;
  }
  const std::size_t q = cq.q;
  cq.mul.resize(q * q);
  cq.comm.resize(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      cq.mul[a * q + b] = cq.coset_of[g.mul(cq.reps[a], cq.reps[b])];
      cq.comm[a * q + b] = g.commutator(cq.reps[a], cq.reps[b]);
    }
  }
  cq.invariant.resize(q);
  for (std::size_t a = 0; a < q; ++a) {
    std::size_t ord = 1;
    for (int x = static_cast<int>(a); x != 0; x = cq.m(x, static_cast<int>(a))) ++ord;
    std::size_t cent = 0;
    ElementSet values(n);
    for (std::size_t b = 0; b < q; ++b) {
      if (cq.mul[a * q + b] == cq.mul[b * q + a]) ++cent;
      values.insert(cq.comm[a * q + b]);
    }
    cq.invariant[a] = {ord, cent, values.count()};
  }
  return cq;
}

// Generators of G/Z taken from the cosets of G's generators.
std::vector<int> quotient_generators(const CentralQuotient& cq) {
  std::vector<char> in_span(cq.q, 0);
  in_span[0] = 1;
  std::vector<int> span{0};
  std::vector<int> gens;
  auto try_add = [&](int s) {
    if (in_span[static_cast<std::size_t>(s)]) return;
    gens.push_back(s);
    for (std::size_t head = 0; head < span.size(); ++head) {
      for (int t : gens) {
        const int y = cq.m(span[head], t);
        if (!in_span[static_cast<std::size_t>(y)]) {
          in_span[static_cast<std::size_t>(y)] = 1;
          span.push_back(y);
        }
      }
    }
  };
  for (Elem s : cq.g->generators()) try_add(cq.coset_of[s]);
  for (std::size_t a = 0; a < cq.q; ++a) try_add(static_cast<int>(a));
  return gens;
}

class Search {
 public:
  Search(const CentralQuotient& a, const CentralQuotient& b, const IsoclinismOptions& options, IsoclinismStats& stats)
      : a_(a), b_(b), options_(options), stats_(stats) {
    gens_ = quotient_generators(a_);
    images_.resize(gens_.size());
    theta_.assign(a_.q, kUnset);
    used_.assign(b_.q, 0);
    phi_.assign(a_.g->order(), kUnset);
    phi_rev_.assign(b_.g->order(), kUnset);
    theta_[0] = 0;
    used_[0] = 1;
    domain_.push_back(0);
    phi_[0] = 0;
    phi_rev_[0] = 0;
  }

  std::optional<IsoclinismWitness> run() {
    if (dfs(0)) return witness_;
    return std::nullopt;
  }

 private:
  struct Undo {
    std::size_t domain_size;
    std::vector<int> phi_keys;
  };

  void undo(const Undo& u) {
    for (std::size_t i = u.domain_size; i < domain_.size(); ++i) {
      used_[static_cast<std::size_t>(theta_[static_cast<std::size_t>(domain_[i])])] = 0;
      theta_[static_cast<std::size_t>(domain_[i])] = kUnset;
    }
    domain_.resize(u.domain_size);
    for (int key : u.phi_keys) {
      phi_rev_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(key)])] = kUnset;
      phi_[static_cast<std::size_t>(key)] = kUnset;
    }
  }

  bool set_phi(Elem x, Elem y, Undo& u) {
    const int cur = phi_[x];
    if (cur != kUnset) return cur == y;
    if (phi_rev_[y] != kUnset) return false;
    phi_[x] = y;
    phi_rev_[y] = x;
    u.phi_keys.push_back(x);
    return true;
  }

  // Closes the domain under generators 0..j and checks the commutator map.
  bool extend(std::size_t j, Undo& u) {
    const std::size_t start = u.domain_size;
    for (std::size_t head = 0; head < domain_.size(); ++head) {
      const int x = domain_[head];
      for (std::size_t i = 0; i <= j; ++i) {
        const int z = a_.m(x, gens_[i]);
        const int im = b_.m(theta_[static_cast<std::size_t>(x)], images_[i]);
        const int cur = theta_[static_cast<std::size_t>(z)];
        if (cur == kUnset) {
          if (used_[static_cast<std::size_t>(im)]) return false;
          if (a_.invariant[static_cast<std::size_t>(z)] != b_.invariant[static_cast<std::size_t>(im)]) return false;
          theta_[static_cast<std::size_t>(z)] = im;
          used_[static_cast<std::size_t>(im)] = 1;
          domain_.push_back(z);
        } else if (cur != im) {
          return false;
        }
      }
    }
    for (std::size_t k = start; k < domain_.size(); ++k) {
      const int x = domain_[k];
      const int tx = theta_[static_cast<std::size_t>(x)];
      for (int y : domain_) {
        const int ty = theta_[static_cast<std::size_t>(y)];
        if (!set_phi(a_.c(x, y), b_.c(tx, ty), u)) return false;
        if (!set_phi(a_.c(y, x), b_.c(ty, tx), u)) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t j) {
    if (j == gens_.size()) return leaf();
    const int s = gens_[j];
    for (std::size_t cand = 1; cand < b_.q; ++cand) {
      if (used_[cand] || a_.invariant[static_cast<std::size_t>(s)] != b_.invariant[cand]) continue;
      ++stats_.nodes;
      if (options_.node_budget && stats_.nodes > options_.node_budget) {
        throw Error(ErrorKind::invalid_parameters, "isoclinism search exceeded its node budget");
      }
      images_[j] = static_cast<int>(cand);
      Undo u{domain_.size(), {}};
      if (extend(j, u) && dfs(j + 1)) return true;
      undo(u);
    }
    return false;
  }

  // theta is a full isomorphism; phi is known on commutators and must extend
  // to an isomorphism G' -> H'.
  bool leaf() {
    ++stats_.leaves;
    if (domain_.size() != a_.q) return false;
    std::vector<int> phi = phi_;
    std::vector<int> rev = phi_rev_;
    std::vector<Elem> comm_gens;
    for (std::size_t x = 0; x < phi_.size(); ++x) {
      if (phi_[x] != kUnset) comm_gens.push_back(static_cast<Elem>(x));
    }
    const GroupTable& g = *a_.g;
    const GroupTable& h = *b_.g;
    std::vector<Elem> queue{0};
    std::vector<char> seen(g.order(), 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem x = queue[head];
      for (Elem c : comm_gens) {
        const Elem z = g.mul(x, c);
        const auto im = static_cast<int>(h.mul(static_cast<Elem>(phi[x]), static_cast<Elem>(phi[c])));
        if (phi[z] == kUnset) {
          if (rev[static_cast<std::size_t>(im)] != kUnset) return false;
          phi[z] = im;
          rev[static_cast<std::size_t>(im)] = z;
        } else if (phi[z] != im) {
          return false;
        }
        if (!seen[z]) {
          seen[z] = 1;
          queue.push_back(z);
        }
      }
    }
    if (queue.size() != a_.derived_order || queue.size() != b_.derived_order) return false;
    witness_.theta.clear();
    for (std::size_t x = 0; x < a_.q; ++x) {
      witness_.theta.emplace_back(a_.reps[x], b_.reps[static_cast<std::size_t>(theta_[x])]);
    }
    witness_.phi.clear();
    std::sort(queue.begin(), queue.end());
    for (Elem x : queue) witness_.phi.emplace_back(x, static_cast<Elem>(phi[x]));
    return true;
  }

  const CentralQuotient& a_;
  const CentralQuotient& b_;
  const IsoclinismOptions& options_;
  IsoclinismStats& stats_;
  std::vector<int> gens_;
  std::vector<int> images_;
  std::vector<int> theta_;
  std::vector<char> used_;
  std::vector<int> domain_;
  std::vector<int> phi_;
  std::vector<int> phi_rev_;
  IsoclinismWitness witness_;
};

}  // namespace

std::optional<IsoclinismWitness> are_isoclinic(const GroupTable& g, const GroupTable& h, const IsoclinismOptions& options,
                                               IsoclinismStats* stats) {
  IsoclinismStats local;
  IsoclinismStats& st = stats ? *stats : local;
  const CentralQuotient a = central_quotient(g, options.quotient_cap);
  const CentralQuotient b = central_quotient(h, options.quotient_cap);
  if (a.q != b.q || a.derived_order != b.derived_order) return std::nullopt;
  auto sorted = [](std::vector<std::array<std::size_t, 3>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(a.invariant) != sorted(b.invariant)) return std::nullopt;
  Search search(a, b, options, st);
  return search.run();
}

bool verify_witness(const GroupTable& g, const GroupTable& h, const IsoclinismWitness& w) {
  const std::size_t cap = std::max(g.order(), h.order());
  const CentralQuotient a = central_quotient(g, cap);
  const CentralQuotient b = central_quotient(h, cap);
  if (a.q != b.q || w.theta.size() != a.q) return false;
  std::vector<int> theta(a.q, kUnset);
  std::vector<char> hit(b.q, 0);
  for (auto [x, y] : w.theta) {
    if (x >= g.order() || y >= h.order()) return false;
    const auto ca = static_cast<std::size_t>(a.coset_of[x]);
    const auto cb = b.coset_of[y];
    if (theta[ca] != kUnset || hit[static_cast<std::size_t>(cb)]) return false;
    theta[ca] = cb;
    hit[static_cast<std::size_t>(cb)] = 1;
  }
  if (a.derived_order != b.derived_order || w.phi.size() != a.derived_order) return false;
  std::vector<int> phi(g.order(), kUnset);
  std::vector<char> phi_hit(h.order(), 0);
  for (auto [x, y] : w.phi) {
    if (x >= g.order() || y >= h.order()) return false;
    if (!a.derived.contains(x) || !b.derived.contains(y) || phi[x] != kUnset || phi_hit[y]) return false;
    phi[x] = y;
    phi_hit[y] = 1;
  }
  for (std::size_t x = 0; x < a.q; ++x) {
    for (std::size_t y = 0; y < a.q; ++y) {
      const int tx = theta[x];
      const int ty = theta[y];
      if (theta[static_cast<std::size_t>(a.m(static_cast<int>(x), static_cast<int>(y)))] != b.m(tx, ty)) return false;
      if (phi[a.c(static_cast<int>(x), static_cast<int>(y))] != b.c(tx, ty)) return false;
    }
  }
  for (auto [x, fx] : w.phi) {
    for (auto [y, fy] : w.phi) {
      if (phi[g.mul(x, y)] != h.mul(fx, fy)) return false;
    }
  }
  return true;
}

std::size_t stem_order(const GroupTable& g) {
  const Subgroup z = center(g);
  const Subgroup d = derived_subgroup(g);
  return g.order() / z.order() * z.members().intersection_count(d.members());
}

}  // namespace simconj
