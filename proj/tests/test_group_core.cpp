#include <doctest.h>

#include "simconj/families.hpp"
#include "simconj/group_table.hpp"

using namespace simconj;

TEST_CASE("permutation closure builds S3") {
  const auto s3 = build_from_permutations({{1, 0, 2}, {1, 2, 0}}, {.order_cap = kDefaultOrderCap, .label = "S3"});
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(certify(s3).passed());
  for (Elem x = 0; x < 6; ++x) {
    CHECK(s3.mul(x, s3.inv(x)) == 0);
    CHECK(s3.power(x, s3.element_order(x)) == 0);
  }
}

TEST_CASE("permutation errors") {
  CHECK_THROWS_AS(build_from_permutations({{0, 0, 1}}), Error);
  CHECK_THROWS_AS(build_from_permutations({{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}, {.order_cap = 100, .label = {}}), Error);
  try {
    build_from_permutations({{1, 0, 2}, {1, 2, 0}}, {.order_cap = 5, .label = {}});
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::closure_exceeds_cap);
  }
}

TEST_CASE("cycles helper") {
  const auto p = permutation_from_cycles(4, {{0, 1, 2}});
  CHECK(p == Permutation{1, 2, 0, 3});
}

TEST_CASE("cayley tables") {
  const std::vector<std::vector<int>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  const auto g = build_from_cayley(z3);
  CHECK(g.order() == 3);
  CHECK(g.is_abelian());

  const std::vector<std::vector<int>> broken{{0, 1, 2}, {1, 1, 0}, {2, 0, 1}};
  try {
    build_from_cayley(broken);
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::not_a_group);
  }
  // Latin square that is not associative
  const std::vector<std::vector<int>> quasigroup{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(build_from_cayley(quasigroup), Error);
}

TEST_CASE("from_raw tables are reported, not rejected") {
  std::vector<Elem> mul{0, 1, 1, 1};
  const auto g = GroupTable::from_raw(2, mul, {1}, "bad");
  const auto report = certify(g);
  CHECK_FALSE(report.passed());
  REQUIRE(report.first_failure() != nullptr);
}

TEST_CASE("subgroups and products") {
  const auto d8 = dihedral(8);
  const auto whole = whole_group(d8);
  CHECK(whole.order() == 8);
  CHECK(trivial_subgroup(d8).order() == 1);
  const std::vector<Elem> gens{d8.generators()[0]};
  const auto h = generate_subgroup(d8, gens);
  CHECK(8 % h.order() == 0);
  CHECK(h.is_subgroup_of(whole));
  const auto sub = induced_table(h, "H");
  CHECK(sub.order() == h.order());
  CHECK(certify(sub).passed());

  const auto prod = direct_product(cyclic(2), cyclic(3), "C2xC3");
  CHECK(prod.order() == 6);
  CHECK(prod.is_abelian());
  CHECK(certify(prod).passed());
}

TEST_CASE("catalog groups certify and have the listed order") {
  for (const auto& e : catalog_up_to(64)) {
    CAPTURE(e.name);
    const auto g = e.build();
    CHECK(g.order() == e.order);
    CHECK(certify(g).passed());
  }
}
