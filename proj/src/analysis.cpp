#include "simconj/analysis.hpp"

#include <algorithm>

namespace simconj {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool pairwise_commute(const GroupTable& g, const std::vector<Elem>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!g.commute(xs[i], xs[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t ClassData::center_size() const {
  return static_cast<std::size_t>(std::count(class_equation.begin(), class_equation.end(), 1U));
}

ClassData conjugacy_data(const GroupTable& g) {
  const std::size_t n = g.order();
  ClassData data;
  data.class_of.assign(n, UINT32_MAX);
  std::vector<Elem> gens = g.generators();
  for (std::size_t x = 0; x < n; ++x) {
    if (data.class_of[x] != UINT32_MAX) continue;
    const auto cls = static_cast<std::uint32_t>(data.classes.size());
    std::vector<Elem> orbit{static_cast<Elem>(x)};
    data.class_of[x] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Elem s : gens) {
        const Elem y = g.conjugate(s, orbit[head]);
        if (data.class_of[y] == UINT32_MAX) {
          data.class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    const std::uint64_t csize = n / orbit.size();
    data.representatives.push_back(static_cast<Elem>(x));
    data.centralizer_sizes.push_back(csize);
    data.z_histogram[csize] += orbit.size();
    data.class_equation.push_back(orbit.size());
    data.classes.push_back(std::move(orbit));
  }
  std::sort(data.class_equation.begin(), data.class_equation.end());
  return data;
}

ElementSet centralizer_set(const GroupTable& g, Elem x) {
  ElementSet out(g.order());
  kernels::equal_mask(g.row(x), g.column(x), out.words());
  return out;
}

Subgroup centralizer(const GroupTable& g, Elem x) { return Subgroup(g, centralizer_set(g, x)); }

std::size_t centralizer_size(const GroupTable& g, Elem x) { return kernels::count_equal(g.row(x), g.column(x)); }

Subgroup center(const GroupTable& g) {
  ElementSet z(g.order());
  z.fill();
  for (Elem s : g.generators()) z &= centralizer_set(g, s);
  return Subgroup(g, std::move(z));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const GroupTable& g = a.parent();
  ElementSet comms(g.order());
  for (Elem x : a.elements()) {
    for (Elem y : b.elements()) comms.insert(g.commutator(x, y));
  }
  return generate_subgroup(g, comms);
}

Subgroup derived_subgroup(const GroupTable& g) {
  const Subgroup all = whole_group(g);
  return commutator_subgroup(all, all);
}

std::vector<Subgroup> lower_central_series(const GroupTable& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const Subgroup all = whole_group(g);
  while (series.back().order() > 1) {
    Subgroup next = commutator_subgroup(series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const GroupTable& g) {
  const auto series = lower_central_series(g);
  if (series.back().order() != 1) return std::nullopt;
  return series.size() - 1;
}

bool is_abelian(const Subgroup& h) {
  return pairwise_commute(h.parent(), greedy_generators(h.parent(), h.members()));
}

bool is_ac_group(const GroupTable& g) {
  const auto data = conjugacy_data(g);
  // Centralizers of conjugate elements are conjugate, so class representatives suffice.
  for (std::size_t c = 0; c < data.classes.size(); ++c) {
    if (data.classes[c].size() == 1) continue;
    if (!is_abelian(centralizer(g, data.representatives[c]))) return false;
  }
  return true;
}

std::optional<int> prime_power_exponent(std::size_t order, int p) {
  if (p < 2 || order == 0) return std::nullopt;
  int m = 0;
  while (order % static_cast<std::size_t>(p) == 0) {
    order /= static_cast<std::size_t>(p);
    ++m;
  }
  if (order != 1) return std::nullopt;
  return m;
}

Subgroup frattini_subgroup(const GroupTable& g, int p) {
  const Subgroup d = derived_subgroup(g);
  ElementSet gens = d.members();
  for (std::size_t x = 0; x < g.order(); ++x) gens.insert(g.power(static_cast<Elem>(x), static_cast<std::uint64_t>(p)));
  return generate_subgroup(g, gens);
}

std::vector<Subgroup> maximal_subgroups(const GroupTable& g, int p) {
  if (!prime_power_exponent(g.order(), p)) {
    throw Error(ErrorKind::not_prime_power, "group order " + std::to_string(g.order()) + " is not a power of " + std::to_string(p));
  }
  std::vector<Subgroup> out;
  if (g.order() == 1) return out;
  const Subgroup phi = frattini_subgroup(g, p);
  const auto phi_gens = greedy_generators(g, phi.members());

  // Basis b_0..b_{d-1} of G/Phi chosen greedily from the generators.
  std::vector<Elem> basis;
  Subgroup span = phi;
  for (Elem s : g.generators()) {
    if (span.contains(s)) continue;
    basis.push_back(s);
    std::vector<Elem> gens = phi_gens;
    gens.insert(gens.end(), basis.begin(), basis.end());
    span = generate_subgroup(g, gens);
  }
  const std::size_t d = basis.size();

  // Functionals f on F_p^d normalized so that the first nonzero entry is 1.
  std::vector<int> f(d, 0);
  for (std::size_t pivot = 0; pivot < d; ++pivot) {
    std::size_t free = d - pivot - 1;
    std::size_t count = 1;
    for (std::size_t k = 0; k < free; ++k) count *= static_cast<std::size_t>(p);
    for (std::size_t code = 0; code < count; ++code) {
      std::fill(f.begin(), f.end(), 0);
      f[pivot] = 1;
      std::size_t c = code;
      for (std::size_t k = pivot + 1; k < d; ++k) {
        f[k] = static_cast<int>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      // Kernel basis: e_k - f_k e_pivot for k != pivot.
      std::vector<Elem> gens = phi_gens;
      const Elem inv_pivot = g.inv(basis[pivot]);
      for (std::size_t k = 0; k < d; ++k) {
        if (k == pivot) continue;
        gens.push_back(g.mul(basis[k], g.power(inv_pivot, static_cast<std::uint64_t>(f[k]))));
      }
      out.push_back(generate_subgroup(g, gens));
    }
  }
  return out;
}

bool has_abelian_maximal_subgroup(const GroupTable& g, int p) {
  for (const auto& m : maximal_subgroups(g, p)) {
    if (is_abelian(m)) return true;
  }
  return false;
}

MaximalClassProfile maximal_class_profile(const GroupTable& g, int p) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_parameters, "p must be prime");
  const auto m = prime_power_exponent(g.order(), p);
  if (!m) {
    throw Error(ErrorKind::not_prime_power, "group order " + std::to_string(g.order()) + " is not a power of " + std::to_string(p));
  }
  if (*m < 4) throw Error(ErrorKind::invalid_parameters, "maximal class profile needs |G| = p^m with m >= 4");

  MaximalClassProfile prof;
  prof.p = p;
  prof.m = *m;
  const auto lcs = lower_central_series(g);
  prof.nilpotency_class = lcs.size() - 1;
  prof.has_abelian_maximal_subgroup = has_abelian_maximal_subgroup(g, p);
  prof.is_maximal_class = lcs.back().order() == 1 && prof.nilpotency_class == static_cast<std::size_t>(*m - 1);
  if (!prof.is_maximal_class) return prof;

  const auto gamma = [&](std::size_t i) -> const Subgroup& { return lcs[std::min(i, lcs.size()) - 1]; };
  // lcs[i-1] = gamma_i, and gamma_{m} = 1 is the last entry.
  const Subgroup& g2 = gamma(2);
  const Subgroup& g4 = gamma(4);
  ElementSet k2(g.order());
  const auto g2_gens = greedy_generators(g, g2.members());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (Elem y : g2_gens) {
      if (!g4.contains(g.commutator(static_cast<Elem>(x), y))) {
        inside = false;
        break;
      }
    }
    if (inside) k2.insert(x);
  }
  prof.p_series.push_back(whole_group(g));
  prof.p_series.emplace_back(g, std::move(k2));
  for (int i = 2; i <= *m; ++i) prof.p_series.push_back(gamma(static_cast<std::size_t>(i)));

  const auto& ps = prof.p_series;
  prof.p1_abelian = is_abelian(ps[1]);
  prof.p1_p3_commute = commutator_subgroup(ps[1], ps[3]).order() == 1;
  if (prof.p1_abelian) {
    prof.degree_of_commutativity_positive = true;
  } else {
    bool ok = true;
    for (int i = 1; i < *m && ok; ++i) {
      for (int j = i; j < *m && ok; ++j) {
        const int target = std::min(i + j + 1, *m);
        const Subgroup c = commutator_subgroup(ps[static_cast<std::size_t>(i)], ps[static_cast<std::size_t>(j)]);
        ok = c.is_subgroup_of(ps[static_cast<std::size_t>(target)]);
      }
    }
    prof.degree_of_commutativity_positive = ok;
  }
  return prof;
}

}  // namespace simconj
