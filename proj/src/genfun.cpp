#include "simconj/genfun.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

namespace simconj {

namespace {

struct Fingerprint {
  std::size_t order;
  std::vector<std::uint64_t> class_equation;
  bool abelian;
  std::size_t exponent;

  auto key() const { return std::tie(order, class_equation, abelian, exponent); }
  friend bool operator<(const Fingerprint& a, const Fingerprint& b) { return a.key() < b.key(); }
};

std::size_t group_exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (std::size_t x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(static_cast<Elem>(x)));
  return e;
}

class BCache {
 public:
  std::optional<RationalGF> find(const Fingerprint& fp) const {
    std::shared_lock lock(mu_);
    const auto it = map_.find(fp);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const Fingerprint& fp, const RationalGF& f) {
    std::unique_lock lock(mu_);
    map_.emplace(fp, f);
  }
  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Fingerprint, RationalGF> map_;
};

BCache& global_cache() {
  static BCache cache;
  return cache;
}

RationalGF abelian_b(std::size_t order) { return RationalGF::geometric(Rational(static_cast<unsigned long>(order))); }

class BSolver {
 public:
  BSolver(const BOptions& options, BStats& stats) : options_(options), stats_(stats) {}

  RationalGF solve(const GroupTable& g, std::size_t depth) {
    if (depth > options_.max_depth) {
      throw Error(ErrorKind::recursion_depth_exceeded, "centralizer recursion deeper than " + std::to_string(options_.max_depth));
    }
    stats_.max_depth = std::max(stats_.max_depth, depth);
    stats_.elements += g.order();
    if (g.is_abelian()) {
      ++stats_.abelian_leaves;
      return abelian_b(g.order());
    }

    const ClassData data = conjugacy_data(g);
    std::optional<Fingerprint> fp;
    if (options_.policy == FingerprintPolicy::always) {
      fp = Fingerprint{g.order(), data.class_equation, false, group_exponent(g)};
      if (auto hit = global_cache().find(*fp)) {
        ++stats_.fingerprint_hits;
        return *hit;
      }
    }
    ++stats_.nodes;

    // Distinct classes often share a centralizer (x and xz for central z).
    std::map<std::vector<std::uint64_t>, RationalGF> local;
    RationalGF sum;
    for (std::size_t c = 0; c < data.classes.size(); ++c) {
      if (data.classes[c].size() == 1) continue;
      const Subgroup cent = centralizer(g, data.representatives[c]);
      if (cent.order() >= g.order()) {
        throw Error(ErrorKind::recursion_depth_exceeded, "centralizer of a non-central element is not proper");
      }
      std::vector<std::uint64_t> key(cent.members().words().begin(), cent.members().words().end());
      auto it = local.find(key);
      if (it != local.end()) {
        ++stats_.local_hits;
      } else {
        it = local.emplace(std::move(key), child(cent, depth)).first;
      }
      sum = sum + it->second;
    }
    const auto z = static_cast<unsigned long>(data.center_size());
    RationalGF result = (RationalGF::constant(1) + sum.times_t()).divided_by_factor(Rational(z));
    if (fp) global_cache().insert(*fp, result);
    return result;
  }

 private:
  RationalGF child(const Subgroup& cent, std::size_t depth) {
    if (is_abelian(cent)) {
      ++stats_.abelian_leaves;
      stats_.elements += cent.order();
      return abelian_b(cent.order());
    }
    const GroupTable h = induced_table(cent);
    return solve(h, depth + 1);
  }

  const BOptions& options_;
  BStats& stats_;
};

}  // namespace

RationalGF a_from_class_data(const ClassData& data, std::size_t order) {
  RationalGF sum;
  for (const auto& [m, z] : data.z_histogram) {
    sum = sum + RationalGF::geometric(Rational(static_cast<unsigned long>(m)), Rational(static_cast<unsigned long>(z)));
  }
  return sum.scaled(Rational(1) / Rational(static_cast<unsigned long>(order)));
}

RationalGF a_of_t(const GroupTable& g) { return a_from_class_data(conjugacy_data(g), g.order()); }

Integer alpha_coefficient(const ClassData& data, std::size_t n) {
  if (n == 0) return 1;
  Integer total = 0;
  for (std::uint64_t c : data.centralizer_sizes) {
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(n - 1));
    total += term;
  }
  return total;
}

Integer alpha_coefficient(const GroupTable& g, std::size_t n) { return alpha_coefficient(conjugacy_data(g), n); }

RationalGF b_of_t(const GroupTable& g, const BOptions& options, BStats* stats) {
  BStats local;
  BSolver solver(options, stats ? *stats : local);
  return solver.solve(g, 0);
}

Integer beta_coefficient(const GroupTable& g, std::size_t n) {
  const Rational c = b_of_t(g).coefficient(n);
  return c.get_num();
}

bool a_equivalent(const GroupTable& g, const GroupTable& h) { return a_of_t(g) == a_of_t(h); }

bool b_equivalent(const GroupTable& g, const GroupTable& h) { return b_of_t(g) == b_of_t(h); }

void clear_b_cache() { global_cache().clear(); }

}  // namespace simconj
