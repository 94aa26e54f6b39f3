#include "simconj/group_table.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace simconj {

namespace {

std::uint64_t next_table_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};

// Closure of {0} under right multiplication by `gens`.
ElementSet right_closure(const GroupTable& g, std::span<const Elem> gens) {
  ElementSet seen(g.order());
  std::vector<Elem> queue{0};
  seen.insert(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (y < g.order() && !seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

GroupTable GroupTable::from_raw(std::size_t order, std::vector<Elem> mul, std::vector<Elem> generators,
                                std::string label) {
  if (order == 0 || mul.size() != order * order) {
    throw Error(ErrorKind::not_a_group, "table must be a nonempty square");
  }
  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.transposed_.resize(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) g.transposed_[b * order + a] = g.mul_[a * order + b];
  }
  g.inv_.assign(order, kNoElement);
  for (std::size_t a = 0; a < order; ++a) {
    const auto row = g.row(static_cast<Elem>(a));
    const auto it = std::find(row.begin(), row.end(), Elem{0});
    if (it != row.end()) g.inv_[a] = static_cast<Elem>(it - row.begin());
  }
  g.generators_ = std::move(generators);
  g.label_ = std::move(label);
  g.id_ = next_table_id();
  return g;
}

Elem GroupTable::power(Elem a, std::uint64_t k) const {
  Elem result = 0;
  Elem base = a;
  while (k) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

std::size_t GroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (Elem s : generators_) {
    for (Elem t : generators_) {
      if (!commute(s, t)) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(const GroupTable& parent, ElementSet members)
    : parent_(&parent), members_(std::move(members)), elements_(members_.to_vector()) {}

Subgroup whole_group(const GroupTable& g) {
  ElementSet all(g.order());
  all.fill();
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupTable& g) {
  ElementSet one(g.order());
  one.insert(0);
  return Subgroup(g, std::move(one));
}

Subgroup generate_subgroup(const GroupTable& g, std::span<const Elem> gens) {
  std::vector<Elem> useful;
  for (Elem s : gens) {
    if (s != 0 && std::find(useful.begin(), useful.end(), s) == useful.end()) useful.push_back(s);
  }
  // Right-multiplication closure is the generated subgroup in a finite group.
  return Subgroup(g, right_closure(g, useful));
}

Subgroup generate_subgroup(const GroupTable& g, const ElementSet& gens) {
  const auto list = gens.to_vector();
  return generate_subgroup(g, std::span<const Elem>(list));
}

std::vector<Elem> greedy_generators(const GroupTable& g, const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet reached(g.order());
  reached.insert(0);
  std::vector<Elem> queue{0};
  for (Elem cand : members.to_vector()) {
    if (reached.contains(cand)) continue;
    gens.push_back(cand);
    // Extend the closure: every reached element times the new generator, then BFS.
    const std::size_t old = queue.size();
    for (std::size_t i = 0; i < old; ++i) {
      const Elem y = g.mul(queue[i], cand);
      if (!reached.contains(y)) {
        reached.insert(y);
        queue.push_back(y);
      }
    }
    for (std::size_t head = old; head < queue.size(); ++head) {
      for (Elem s : gens) {
        const Elem y = g.mul(queue[head], s);
        if (!reached.contains(y)) {
          reached.insert(y);
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

GroupTable induced_table(const Subgroup& h, std::string label) {
  const GroupTable& g = h.parent();
  const auto& elems = h.elements();
  const std::size_t n = elems.size();
  std::vector<Elem> pos(g.order(), kNoElement);
  for (std::size_t i = 0; i < n; ++i) pos[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = g.row(elems[i]);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = pos[row[elems[j]]];
  }
  auto gens = greedy_generators(g, h.members());
  for (auto& s : gens) s = pos[s];
  return GroupTable::from_raw(n, std::move(table), std::move(gens), std::move(label));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h, std::string label) {
  const std::size_t m = g.order();
  const std::size_t n = h.order();
  const std::size_t order = m * n;
  if (order > kDefaultOrderCap) throw Error(ErrorKind::closure_exceeds_cap, "direct product too large");
  std::vector<Elem> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const Elem a1 = static_cast<Elem>(a / n), a2 = static_cast<Elem>(a % n);
    for (std::size_t b = 0; b < order; ++b) {
      const Elem b1 = static_cast<Elem>(b / n), b2 = static_cast<Elem>(b % n);
      table[a * order + b] = static_cast<Elem>(g.mul(a1, b1) * n + h.mul(a2, b2));
    }
  }
  std::vector<Elem> gens;
  for (Elem s : g.generators()) gens.push_back(static_cast<Elem>(s * n));
  for (Elem s : h.generators()) gens.push_back(s);
  if (label.empty()) label = g.label() + "x" + h.label();
  return GroupTable::from_raw(order, std::move(table), std::move(gens), std::move(label));
}

Permutation permutation_from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || static_cast<std::size_t>(from) >= degree || to < 0 ||
          static_cast<std::size_t>(to) >= degree) {
        throw Error(ErrorKind::invalid_permutation, "cycle point out of range");
      }
      p[static_cast<std::size_t>(from)] = to;
    }
  }
  return p;
}

GroupTable build_from_permutations(const std::vector<Permutation>& gens, const BuildOptions& options) {
  if (gens.empty()) throw Error(ErrorKind::invalid_permutation, "no generators");
  const std::size_t degree = gens.front().size();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& p = gens[k];
    if (p.size() != degree) throw Error(ErrorKind::invalid_permutation, "generators act on different domains");
    std::vector<bool> hit(degree, false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[static_cast<std::size_t>(v)]) {
        throw Error(ErrorKind::invalid_permutation, "generator " + std::to_string(k) + " is not a bijection");
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, std::size_t, PermHash> index{{id, 0}};
  // right[x * k + s] = index of x * gens[s]
  std::vector<std::size_t> right;
  std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};

  const std::size_t k = gens.size();
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation prod(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        prod[i] = gens[s][static_cast<std::size_t>(elements[head][i])];
      }
      auto [it, fresh] = index.try_emplace(prod, elements.size());
      if (fresh) {
        if (elements.size() >= options.order_cap) {
          throw Error(ErrorKind::closure_exceeds_cap,
                      "closure exceeds order cap " + std::to_string(options.order_cap));
        }
        elements.push_back(std::move(prod));
        parent.emplace_back(head, s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Elem> table(n * n);
  // Column b = b' * s is column b' followed by right multiplication by s.
  for (std::size_t x = 0; x < n; ++x) table[x * n] = static_cast<Elem>(x);
  for (std::size_t b = 1; b < n; ++b) {
    const auto [prev, s] = parent[b];
    for (std::size_t x = 0; x < n; ++x) {
      table[x * n + b] = static_cast<Elem>(right[table[x * n + prev] * k + s]);
    }
  }
  std::vector<Elem> gen_idx;
  for (const auto& p : gens) gen_idx.push_back(static_cast<Elem>(index.at(p)));
  return GroupTable::from_raw(n, std::move(table), std::move(gen_idx), options.label);
}

GroupTable build_from_cayley(const std::vector<std::vector<int>>& rows, const BuildOptions& options) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorKind::not_a_group, "empty table");
  if (n > options.order_cap) throw Error(ErrorKind::closure_exceeds_cap, "table exceeds order cap");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw Error(ErrorKind::not_a_group, "table is not square (row " + std::to_string(a) + ")");
    for (std::size_t b = 0; b < n; ++b) {
      const int v = rows[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::not_a_group, "closure: entry out of range at (" + std::to_string(a) + ", " +
                                                std::to_string(b) + ")");
      }
      table[a * n + b] = static_cast<Elem>(v);
    }
  }
  GroupTable raw = GroupTable::from_raw(n, std::move(table), {}, options.label);
  ElementSet all(n);
  all.fill();
  auto gens = greedy_generators(raw, all);
  GroupTable g = GroupTable::from_raw(n, raw.raw_table(), std::move(gens), options.label);
  const auto report = certify(g);
  if (const auto* bad = report.first_failure()) {
    throw Error(ErrorKind::not_a_group, bad->name + ": " + bad->detail);
  }
  return g;
}

bool CertificateReport::passed() const { return first_failure() == nullptr; }

const CheckResult* CertificateReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckResult::Status::fail) return &c;
  }
  return nullptr;
}

const CheckResult* CertificateReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CertificateReport certify(const GroupTable& g) {
  using Status = CheckResult::Status;
  CertificateReport report;
  const std::size_t n = g.order();

  CheckResult identity{"identity", Status::pass, {}};
  for (std::size_t x = 0; x < n && identity.status == Status::pass; ++x) {
    const Elem e = static_cast<Elem>(x);
    if (g.mul(0, e) != e || g.mul(e, 0) != e) {
      identity.status = Status::fail;
      identity.detail = "element " + std::to_string(x) + " is not fixed by index 0";
    }
  }
  report.checks.push_back(identity);

  CheckResult inverses{"inverses", Status::pass, {}};
  for (std::size_t x = 0; x < n && inverses.status == Status::pass; ++x) {
    const Elem e = static_cast<Elem>(x);
    const Elem i = g.inv(e);
    if (i == kNoElement || g.mul(i, e) != 0) {
      inverses.status = Status::fail;
      inverses.detail = "element " + std::to_string(x) + " has no two-sided inverse";
    }
  }
  report.checks.push_back(inverses);

  CheckResult latin{"cancellation", Status::pass, {}};
  {
    std::vector<std::uint32_t> stamp(n, 0);
    std::uint32_t round = 0;
    for (std::size_t a = 0; a < n && latin.status == Status::pass; ++a) {
      for (int side = 0; side < 2 && latin.status == Status::pass; ++side) {
        ++round;
        const auto line = side == 0 ? g.row(static_cast<Elem>(a)) : g.column(static_cast<Elem>(a));
        for (std::size_t b = 0; b < n; ++b) {
          if (stamp[line[b]] == round) {
            latin.status = Status::fail;
            latin.detail = std::string(side == 0 ? "row " : "column ") + std::to_string(a) +
                           " repeats element " + std::to_string(line[b]);
            break;
          }
          stamp[line[b]] = round;
        }
      }
    }
  }
  report.checks.push_back(latin);

  CheckResult generation{"generation", Status::pass, {}};
  const auto reached = right_closure(g, g.generators());
  if (reached.count() != n) {
    generation.status = Status::fail;
    generation.detail = "generators reach " + std::to_string(reached.count()) + " of " + std::to_string(n) + " elements";
  }
  report.checks.push_back(generation);

  CheckResult full{"associativity_full", Status::pass, {}};
  CheckResult gens{"associativity_generators", Status::pass, {}};
  if (n <= kFullAssociativityLimit) {
    gens.status = Status::skipped;
    gens.detail = "exhaustive check performed";
    for (std::size_t x = 0; x < n && full.status == Status::pass; ++x) {
      for (std::size_t y = 0; y < n && full.status == Status::pass; ++y) {
        const Elem xy = g.mul(static_cast<Elem>(x), static_cast<Elem>(y));
        const auto xy_row = g.row(xy);
        const auto y_row = g.row(static_cast<Elem>(y));
        const auto x_row = g.row(static_cast<Elem>(x));
        for (std::size_t z = 0; z < n; ++z) {
          if (xy_row[z] != x_row[y_row[z]]) {
            full.status = Status::fail;
            full.detail = "(xy)z != x(yz) at " + triple(x, y, z);
            break;
          }
        }
      }
    }
  } else {
    full.status = Status::skipped;
    full.detail = "order > 256";
  }
  if (n > kFullAssociativityLimit || full.status == Status::fail) {
    if (gens.status == Status::skipped) gens = {"associativity_generators", Status::pass, {}};
    for (std::size_t x = 0; x < n && gens.status == Status::pass; ++x) {
      const auto x_row = g.row(static_cast<Elem>(x));
      for (Elem s : g.generators()) {
        const auto s_col = g.column(s);
        for (std::size_t y = 0; y < n; ++y) {
          // (xy)s == x(ys)
          if (s_col[x_row[y]] != x_row[s_col[y]]) {
            gens.status = Status::fail;
            gens.detail = "(xy)s != x(ys) at " + triple(x, y, s);
            break;
          }
        }
        if (gens.status == Status::fail) break;
      }
    }
  }
  report.checks.push_back(full);
  report.checks.push_back(gens);
  return report;
}

}  // namespace simconj
