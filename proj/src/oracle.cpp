#include "simconj/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "simconj/analysis.hpp"
#include "simconj/genfun.hpp"

namespace simconj {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::uint64_t roots() {
    std::uint64_t c = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i) c += find(i) == i;
    return c;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

std::uint64_t tuple_space(const GroupTable& g, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / std::max<std::uint64_t>(g.order(), 1)) {
      throw Error(ErrorKind::tuple_cap_exceeded, "|G|^n exceeds the tuple cap " + std::to_string(cap));
    }
    total *= g.order();
  }
  if (total > cap) throw Error(ErrorKind::tuple_cap_exceeded, "|G|^n exceeds the tuple cap " + std::to_string(cap));
  return total;
}

// conj[s][x] = s x s^-1 for each generator s
std::vector<std::vector<Elem>> conjugation_tables(const GroupTable& g) {
  std::vector<std::vector<Elem>> out;
  for (Elem s : g.generators()) {
    std::vector<Elem> t(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) t[x] = g.conjugate(s, static_cast<Elem>(x));
    out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t conjugate_code(std::uint64_t code, const std::vector<Elem>& conj, std::size_t n, std::uint64_t order) {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = code % order;
    code /= order;
    out += conj[x] * place;
    place *= order;
  }
  return out;
}

template <class Clock = std::chrono::steady_clock>
std::uint64_t since(typename Clock::time_point start) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

}  // namespace

std::string_view tuple_mode_name(TupleMode m) { return m == TupleMode::all_tuples ? "all_tuples" : "commuting_tuples"; }

std::string OrbitCount::record() const {
  return "group=" + group + " mode=" + std::string(tuple_mode_name(mode)) + " n=" + std::to_string(n) +
         " count=" + std::to_string(count) + " tuples=" + std::to_string(tuples_visited) + " work=" + std::to_string(work);
}

OrbitCount alpha_brute(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap) {
  const std::uint64_t total = tuple_space(g, n, tuple_cap);
  const auto conj = conjugation_tables(g);
  UnionFind uf(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (const auto& c : conj) uf.unite(static_cast<std::uint32_t>(code), static_cast<std::uint32_t>(conjugate_code(code, c, n, g.order())));
  }
  OrbitCount out;
  out.group = g.label();
  out.n = n;
  out.mode = TupleMode::all_tuples;
  out.count = uf.roots();
  out.tuples_visited = total;
  out.work = total * conj.size() * n;
  return out;
}

std::vector<std::uint64_t> commuting_tuples(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap) {
  tuple_space(g, n, tuple_cap);
  const std::size_t order = g.order();
  std::vector<ElementSet> cent;
  cent.reserve(order);
  for (std::size_t x = 0; x < order; ++x) cent.push_back(centralizer_set(g, static_cast<Elem>(x)));

  std::vector<std::uint64_t> out;
  // allowed[d] = elements commuting with the first d coordinates
  std::vector<ElementSet> allowed(n + 1, ElementSet(order));
  allowed[0].fill();
  auto rec = [&](auto&& self, std::size_t depth, std::uint64_t code) -> void {
    if (depth == n) {
      out.push_back(code);
      return;
    }
    for (Elem x : allowed[depth].to_vector()) {
      allowed[depth + 1] = allowed[depth];
      allowed[depth + 1] &= cent[x];
      self(self, depth + 1, code * order + x);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<std::uint64_t> commuting_tuples_filtered(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap) {
  const std::uint64_t total = tuple_space(g, n, tuple_cap);
  const std::uint64_t order = g.order();
  std::vector<std::uint64_t> out;
  std::vector<Elem> xs(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      xs[i] = static_cast<Elem>(c % order);
      c /= order;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = g.commute(xs[i], xs[j]);
    }
    if (ok) out.push_back(code);
  }
  return out;
}

OrbitCount beta_brute(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap) {
  const auto tuples = commuting_tuples(g, n, tuple_cap);
  const auto conj = conjugation_tables(g);
  UnionFind uf(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (const auto& c : conj) {
      const std::uint64_t img = conjugate_code(tuples[i], c, n, g.order());
      const auto it = std::lower_bound(tuples.begin(), tuples.end(), img);
      if (it == tuples.end() || *it != img) throw Error(ErrorKind::not_a_group, "conjugate of a commuting tuple is not commuting");
      uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(it - tuples.begin()));
    }
  }
  OrbitCount out;
  out.group = g.label();
  out.n = n;
  out.mode = TupleMode::commuting_tuples;
  out.count = uf.roots();
  out.tuples_visited = tuples.size();
  out.work = tuples.size() * conj.size() * n;
  return out;
}

std::string to_csv(const BenchRow& row) {
  return row.strategy + "," + row.group + "," + std::to_string(row.order) + "," + std::to_string(row.n) + "," + row.count +
         "," + std::to_string(row.nanos) + "," + std::to_string(row.work);
}

std::vector<BenchRow> bench_group(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap) {
  std::vector<BenchRow> rows;
  const std::size_t order = g.order();
  auto row = [&](std::string strategy, std::string count, std::uint64_t nanos, std::uint64_t work) {
    rows.push_back(BenchRow{std::move(strategy), g.label(), order, n, std::move(count), nanos, work});
  };

  auto t0 = std::chrono::steady_clock::now();
  // Class BFS under generator conjugation, then one centralizer per class.
  const ClassData data = conjugacy_data(g);
  std::vector<std::uint64_t> zsize(order);
  for (std::size_t x = 0; x < order; ++x) zsize[x] = data.centralizer_sizes[data.class_of[x]];
  row("class_data", std::to_string(data.class_number()), since(t0),
      static_cast<std::uint64_t>(order) * (g.generators().size() + data.class_number()));

  t0 = std::chrono::steady_clock::now();
  Integer sum = 0;
  for (std::uint64_t z : zsize) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(z), static_cast<unsigned long>(n));
    sum += term;
  }
  const Integer alpha = sum / static_cast<unsigned long>(order);
  row("burnside_sum", alpha.get_str(), since(t0), order);

  t0 = std::chrono::steady_clock::now();
  BStats stats;
  const Rational beta = b_of_t(g, {}, &stats).coefficient(n);
  row("centralizer_recursion", beta.get_str(), since(t0), stats.elements);

  try {
    t0 = std::chrono::steady_clock::now();
    const OrbitCount a = alpha_brute(g, n, tuple_cap);
    row("brute_alpha", std::to_string(a.count), since(t0), a.work);
    t0 = std::chrono::steady_clock::now();
    const OrbitCount b = beta_brute(g, n, tuple_cap);
    row("brute_beta", std::to_string(b.count), since(t0), b.work);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::tuple_cap_exceeded) throw;
    row("brute_alpha", "skipped", 0, 0);
    row("brute_beta", "skipped", 0, 0);
  }
  return rows;
}

}  // namespace simconj
