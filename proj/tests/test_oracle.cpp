#include <doctest.h>

#include "simconj/families.hpp"
#include "simconj/genfun.hpp"
#include "simconj/oracle.hpp"

using namespace simconj;

TEST_CASE("pinned orbit counts") {
  const auto s3 = symmetric(3);
  CHECK(alpha_brute(s3, 0).count == 1);
  CHECK(alpha_brute(s3, 2).count == 11);
  CHECK(alpha_brute(s3, 3).count == 49);
  CHECK(beta_brute(s3, 2).count == 8);
  CHECK(beta_brute(quaternion(8), 2).count == 22);
  CHECK(alpha_brute(cyclic(5), 3).count == 125);
}

TEST_CASE("brute force matches the series on small catalog groups") {
  for (const auto& e : catalog_up_to(24)) {
    CAPTURE(e.name);
    const auto g = e.build();
    const auto a = a_of_t(g).series(4);
    const auto b = b_of_t(g).series(4);
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto ab = alpha_brute(g, n);
      const auto bb = beta_brute(g, n);
      CHECK(Rational(ab.count) == a[n]);
      CHECK(Rational(bb.count) == b[n]);
      CHECK(bb.count <= ab.count);
      if (n <= 1) CHECK(bb.count == ab.count);
    }
  }
}

TEST_CASE("prefix-centralizer enumeration visits exactly the commuting tuples") {
  for (const auto& e : catalog_up_to(12)) {
    CAPTURE(e.name);
    const auto g = e.build();
    for (std::size_t n = 1; n <= 3; ++n) CHECK(commuting_tuples(g, n) == commuting_tuples_filtered(g, n));
  }
}

TEST_CASE("tuple cap") {
  try {
    alpha_brute(dihedral(64), 4, 1000);
    FAIL("expected TupleCapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::tuple_cap_exceeded);
  }
}

TEST_CASE("records and bench rows") {
  const auto c = alpha_brute(symmetric(3), 2);
  CHECK(c.record() == "group=S3 mode=all_tuples n=2 count=11 tuples=36 work=144");
  const auto rows = bench_group(dihedral(32), 2);
  REQUIRE(rows.size() == 5);
  std::map<std::string, BenchRow> by;
  for (const auto& r : rows) by[r.strategy] = r;
  CHECK(by["burnside_sum"].count == by["brute_alpha"].count);
  CHECK(by["centralizer_recursion"].count == by["brute_beta"].count);
  CHECK(by["brute_alpha"].work > by["burnside_sum"].work + by["class_data"].work);
  CHECK(to_csv(by["burnside_sum"]).rfind("burnside_sum,D32,32,2,", 0) == 0);
}
