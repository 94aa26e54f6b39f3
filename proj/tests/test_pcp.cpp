#include <doctest.h>

#include "simconj/analysis.hpp"
#include "simconj/pcp.hpp"

using namespace simconj;

namespace {

// Heisenberg group mod p: [g1, g0] = g2, g2 central.
PcPresentation heisenberg(int p) {
  PcPresentation pcp({p, p, p}, p, "Heis");
  pcp.set_commutator(1, 0, pcp.word({{2, 1}}));
  return pcp;
}

}  // namespace

TEST_CASE("elementary abelian presentation") {
  PcPresentation pcp({2, 2, 2}, 2);
  const auto g = build_from_pcp(pcp);
  CHECK(g.order() == 8);
  CHECK(g.is_abelian());
}

TEST_CASE("cyclic group through a power word") {
  PcPresentation pcp({2, 2, 2}, 2, "C8");
  pcp.set_power(0, pcp.word({{1, 1}}));
  pcp.set_power(1, pcp.word({{2, 1}}));
  const auto g = build_from_pcp(pcp);
  CHECK(g.element_order(0) == 1);
  std::size_t max_order = 0;
  for (Elem x = 0; x < 8; ++x) max_order = std::max(max_order, g.element_order(x));
  CHECK(max_order == 8);
}

TEST_CASE("heisenberg groups") {
  for (int p : {2, 3, 5}) {
    const auto g = build_from_pcp(heisenberg(p));
    CHECK(g.order() == static_cast<std::size_t>(p * p * p));
    CHECK(center(g).order() == static_cast<std::size_t>(p));
    CHECK(derived_subgroup(g).order() == static_cast<std::size_t>(p));
  }
}

TEST_CASE("collector multiplies normal forms") {
  const auto pcp = heisenberg(3);
  const Collector c(pcp);
  // g1 g0 = g0 g1 [g1, g0] = g0 g1 g2
  CHECK(c.multiply({0, 1, 0}, {1, 0, 0}) == ExponentVector{1, 1, 1});
  CHECK(c.index_of({1, 2, 0}) == 15);
  CHECK(c.exponents_of(15) == ExponentVector{1, 2, 0});
}

TEST_CASE("validation rejects malformed presentations") {
  PcPresentation bad_order({4, 6}, 0);
  CHECK_THROWS_AS(bad_order.validate(), Error);

  PcPresentation wrong_prime({3, 2}, 2);
  CHECK_THROWS_AS(wrong_prime.validate(), Error);

  PcPresentation backwards({2, 2}, 2);
  backwards.power_words[1] = {1, 0};
  CHECK_THROWS_AS(backwards.validate(), Error);

  PcPresentation p({2, 2}, 2);
  CHECK_THROWS_AS(p.set_commutator(0, 1, {0, 0}), Error);
}

TEST_CASE("inconsistent presentations fail certification") {
  // g0^2 = g1 with g1 of order 2 but [g1, g0] = g1 makes g0 act nontrivially on its own power.
  PcPresentation pcp({2, 2}, 2);
  pcp.set_power(0, pcp.word({{1, 1}}));
  pcp.set_commutator(1, 0, pcp.word({{1, 1}}));
  try {
    build_from_pcp(pcp);
    FAIL("expected an inconsistency");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::inconsistent_presentation);
  }
}

TEST_CASE("order cap") {
  PcPresentation pcp({5, 5, 5, 5, 5, 5}, 5);
  CHECK_THROWS_AS(build_from_pcp(pcp, {.order_cap = 10000}), Error);
}
