#include <doctest.h>

#include "simconj/rational_gf.hpp"

using namespace simconj;

namespace {

RationalGF q8_b() {
  return RationalGF({Rational(1), Rational(-1)}, {{Rational(2), 1}, {Rational(4), 1}});
}

}  // namespace

TEST_CASE("geometric series") {
  const auto f = RationalGF::geometric(3);
  const auto s = f.series(5);
  CHECK(s == std::vector<Rational>{1, 3, 9, 27, 81});
  CHECK(f.coefficient(10) == 59049);
}

TEST_CASE("canonical form cancels common factors") {
  // (1 - 2t)/(1 - 2t)^2 = 1/(1 - 2t)
  const RationalGF f({Rational(1), Rational(-2)}, {{Rational(2), 2}});
  CHECK(f == RationalGF::geometric(2));
  // Negative exponents move into the numerator.
  const RationalGF g({Rational(1)}, {{Rational(3), -1}});
  CHECK(g == RationalGF::polynomial({Rational(1), Rational(-3)}));
}

TEST_CASE("arithmetic agrees with series arithmetic") {
  const auto a = RationalGF::geometric(2) + RationalGF::geometric(5, 3);
  const auto b = q8_b();
  const auto sum = a + b;
  const auto prod = a * b;
  const auto sa = a.series(8), sb = b.series(8), ss = sum.series(8), sp = prod.series(8);
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(ss[n] == sa[n] + sb[n]);
    Rational c = 0;
    for (std::size_t k = 0; k <= n; ++k) c += sa[k] * sb[n - k];
    CHECK(sp[n] == c);
  }
  CHECK((a - a).is_zero());
  CHECK((-a + a).is_zero());
  CHECK(a.times_t().coefficient(3) == a.coefficient(2));
}

TEST_CASE("q8 B function") {
  const auto b = q8_b();
  CHECK(b.series(4) == std::vector<Rational>{1, 5, 22, 92});
  CHECK(b.display() == "(1 - t)/((1 - 2t)(1 - 4t))");
  const auto pf = partial_fractions(b);
  REQUIRE(pf.terms.size() == 2);
  CHECK(pf.terms[0].coefficient == Rational(-1, 2));
  CHECK(pf.terms[0].pole == 2);
  CHECK(pf.terms[1].coefficient == Rational(3, 2));
  CHECK(pf.recombine() == b);
}

TEST_CASE("partial fractions with repeated poles and a polynomial part") {
  const RationalGF f({Rational(2), Rational(0), Rational(1), Rational(5)}, {{Rational(1), 2}, {Rational(3), 1}});
  const auto pf = partial_fractions(f);
  CHECK(pf.recombine() == f);
  const RationalGF poly = RationalGF::polynomial({Rational(1), Rational(2)});
  CHECK(partial_fractions(poly).recombine() == poly);
}

TEST_CASE("normalization rescales poles") {
  const auto b = q8_b().normalized(8);
  CHECK(b.denominator()[0].q == Rational(1, 4));
  CHECK(b.denominator()[1].q == Rational(1, 2));
  CHECK_FALSE(b.has_integer_poles());
  CHECK(b.coefficient(2) * 64 == 22);
}

TEST_CASE("serialization round trips") {
  const auto f = q8_b().normalized(8) + RationalGF::factor(Rational(5, 3), 2);
  CHECK(RationalGF::parse(f.serialize()) == f);
  CHECK(q8_b().serialize() == "num=[1,-1];den=[(2,1),(4,1)]");
  CHECK_THROWS(RationalGF::parse("num=[1;den="));
  const auto j = q8_b().to_json();
  CHECK(j["numerator"][1] == "-1");
}

TEST_CASE("divided_by_factor and structural equality") {
  const auto f = q8_b().divided_by_factor(2);
  CHECK(f.denominator()[0].exponent == 2);
  CHECK(gf_equal(f, f));
  CHECK_FALSE(f == q8_b());
}
