#include <doctest.h>

#include "simconj/analysis.hpp"
#include "simconj/closed_forms.hpp"
#include "simconj/families.hpp"
#include "simconj/genfun.hpp"

using namespace simconj;

namespace {

GroupTable catalog(const char* name) { return find_catalog_entry(name)->build(); }

}  // namespace

TEST_CASE("central quotient of order p^2") {
  for (const auto* name : {"D8", "Q8", "Pauli", "C2xD8", "M16"}) {
    CAPTURE(name);
    const auto g = catalog(name);
    REQUIRE(g.order() / center(g).order() == 4);
    const int m = *prime_power_exponent(g.order(), 2);
    CHECK(a_of_t(g) == a_central_quotient_p2(2, m));
    CHECK(b_of_t(g) == b_central_quotient_p2(2, m));
  }
  const auto heis = catalog("Heis27");
  CHECK(a_of_t(heis) == a_central_quotient_p2(3, 3));
  CHECK(b_of_t(heis) == b_central_quotient_p2(3, 3));
}

TEST_CASE("dihedral lemma") {
  for (int n : {4, 8, 16, 32}) {
    const auto g = dihedral(static_cast<std::size_t>(2 * n));
    CHECK(a_of_t(g) == a_dihedral(n));
    CHECK(b_of_t(g) == b_dihedral(n));
  }
  CHECK_THROWS_AS(a_dihedral(5), Error);
}

TEST_CASE("maximal class 2-groups") {
  for (int n : {4, 5, 6}) {
    const std::size_t order = std::size_t{1} << n;
    for (const auto& g : {dihedral(order), semidihedral(order), quaternion(order)}) {
      CAPTURE(g.label());
      CHECK(a_of_t(g) == a_maximal_class_2group(n));
      CHECK(b_of_t(g) == b_maximal_class_2group(n));
    }
  }
}

TEST_CASE("extraspecial groups of order 32") {
  const auto g = catalog("Gamma5a1");
  CHECK(a_of_t(g) == a_extraspecial_p5(2));
  CHECK(b_of_t(g) == b_extraspecial_p5(2));
  CHECK_FALSE(b_of_t(g) == b_extraspecial_p5_uncorrected(2));
}

TEST_CASE("templates reproduce hand-written values") {
  // |G/Z| = p^2 at p = 2, m = 3 is D8: A = (1 - 7t)/((1 - 4t)(1 - 8t)) after reduction.
  CHECK(a_central_quotient_p2(2, 3).series(3) == std::vector<Rational>{1, 5, 28});
  CHECK(b_central_quotient_p2(2, 3).series(3) == std::vector<Rational>{1, 5, 22});
}

TEST_CASE("table rows and parameter guards") {
  CHECK_THROWS_AS(table_row(Family::gamma3, 3), Error);
  CHECK_THROWS_AS(table_row(Family::phi2, 2), Error);
  CHECK_THROWS_AS(a_central_quotient_p2(4, 3), Error);
  CHECK_THROWS_AS(a_maximal_class(3, 3, MaximalClassCase::abelian_max), Error);
  CHECK(table_row(Family::abelian, 7).a == RationalGF::geometric(1));
  // The table lists Phi3 with Phi4 and Phi7 with Phi8.
  for (int p : {3, 5, 7}) {
    CHECK(table_row(Family::phi3, p).a == table_row(Family::phi4, p).a);
    CHECK(table_row(Family::phi3, p).b == table_row(Family::phi4, p).b);
    CHECK(table_row(Family::phi7, p).b == table_row(Family::phi8, p).b);
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
