#include <doctest.h>

#include <numeric>

#include "simconj/analysis.hpp"
#include "simconj/families.hpp"

using namespace simconj;

TEST_CASE("class data of S3 and D8") {
  const auto s3 = symmetric(3);
  const auto d = conjugacy_data(s3);
  CHECK(d.class_number() == 3);
  CHECK(d.class_equation == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(d.center_size() == 1);
  CHECK(d.z_histogram == std::map<std::uint64_t, std::uint64_t>{{2, 3}, {3, 2}, {6, 1}});

  const auto d8 = conjugacy_data(dihedral(8));
  CHECK(d8.class_equation == std::vector<std::uint64_t>{1, 1, 2, 2, 2});
  CHECK(d8.class_equation == conjugacy_data(quaternion(8)).class_equation);
}

TEST_CASE("class equation invariants on the catalog") {
  for (const auto& e : catalog_up_to(64)) {
    CAPTURE(e.name);
    const auto g = e.build();
    const auto d = conjugacy_data(g);
    CHECK(std::accumulate(d.class_equation.begin(), d.class_equation.end(), std::uint64_t{0}) == g.order());
    for (std::size_t i = 0; i < d.class_number(); ++i) {
      CHECK(d.classes[i].size() * d.centralizer_sizes[i] == g.order());
      CHECK(centralizer_size(g, d.representatives[i]) == d.centralizer_sizes[i]);
    }
    CHECK(d.center_size() == center(g).order());
    CHECK(g.order() % derived_subgroup(g).order() == 0);
  }
}

TEST_CASE("centralizers") {
  const auto q8 = quaternion(8);
  for (Elem x = 0; x < 8; ++x) {
    const auto c = centralizer(q8, x);
    for (Elem y : c.elements()) CHECK(q8.commute(x, y));
    CHECK(c.order() == centralizer_set(q8, x).count());
  }
}

TEST_CASE("nilpotency and series") {
  CHECK(nilpotency_class(cyclic(5)) == 1);
  CHECK(nilpotency_class(dihedral(8)) == 2);
  CHECK(nilpotency_class(dihedral(32)) == 4);
  CHECK_FALSE(nilpotency_class(symmetric(3)).has_value());
  CHECK(lower_central_series(dihedral(16)).back().order() == 1);
}

TEST_CASE("AC groups") {
  CHECK(is_ac_group(symmetric(3)));
  CHECK(is_ac_group(quaternion(8)));
  CHECK_FALSE(is_ac_group(symmetric(4)));
}

TEST_CASE("prime power exponent") {
  CHECK(prime_power_exponent(243, 3) == 5);
  CHECK(prime_power_exponent(1, 7) == 0);
  CHECK_FALSE(prime_power_exponent(12, 2).has_value());
}

TEST_CASE("frattini and maximal subgroups") {
  const auto d8 = dihedral(8);
  CHECK(frattini_subgroup(d8, 2).order() == 2);
  const auto maxes = maximal_subgroups(d8, 2);
  CHECK(maxes.size() == 3);
  for (const auto& m : maxes) CHECK(m.order() == 4);
  CHECK(has_abelian_maximal_subgroup(d8, 2));
  CHECK(maximal_subgroups(elementary_abelian(2, 3), 2).size() == 7);
}

TEST_CASE("maximal class profile") {
  for (const auto* name : {"D32", "SD32", "Q32"}) {
    CAPTURE(name);
    const auto g = find_catalog_entry(name)->build();
    const auto prof = maximal_class_profile(g, 2);
    CHECK(prof.is_maximal_class);
    CHECK(prof.m == 5);
    CHECK(prof.has_abelian_maximal_subgroup);
    CHECK(prof.p_series.size() == 6);
  }
  const auto c2d16 = find_catalog_entry("C2xD16")->build();
  CHECK_FALSE(maximal_class_profile(c2d16, 2).is_maximal_class);
  CHECK_THROWS_AS(maximal_class_profile(symmetric(3), 2), Error);
  CHECK_THROWS_AS(maximal_class_profile(dihedral(8), 2), Error);
}
