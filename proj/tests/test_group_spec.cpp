#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "simconj/genfun.hpp"
#include "simconj/group_spec.hpp"

using namespace simconj;
using nlohmann::json;

TEST_CASE("each spec kind builds") {
  CHECK(build_group(json::parse(R"({"kind":"permutation","generators":[[1,2,0],[1,0,2]]})")).order() == 6);
  CHECK(build_group(json::parse(R"({"kind":"cayley","table":[[0,1],[1,0]]})")).order() == 2);
  const auto heis = build_group(json::parse(R"({"kind":"pcp","prime":3,"relative_orders":[3,3,3],
      "power_words":[[0,0,0],[0,0,0],[0,0,0]],"commutator_words":[{"j":1,"i":0,"word":[0,0,1]}]})"));
  CHECK(heis.order() == 27);
  CHECK_FALSE(heis.is_abelian());
  CHECK(build_group(json::parse(R"({"kind":"family","name":"Phi2","p":3})")).order() == 27);
  CHECK(build_group(json::parse(R"({"kind":"family","name":"dihedral","order":16})")).order() == 16);
  CHECK(build_group(json::parse(R"({"kind":"family","name":"abelian","invariants":[2,2,3]})")).order() == 12);
  CHECK(build_group(json::parse(R"({"kind":"family","name":"symmetric","degree":4})")).order() == 24);
  CHECK(build_group(json::parse(R"j({"kind":"family","name":"SL(2,3)","label":"binary tetrahedral"})j")).label() ==
        "binary tetrahedral");
}

TEST_CASE("malformed specs are parse errors") {
  auto kind_of = [](const char* text) {
    try {
      build_group(json::parse(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_parameters;  // not reached in these cases
  };
  CHECK(kind_of(R"({"kind":"permutation","generators":[[1,0]],"colour":"red"})") == ErrorKind::parse_error);
  CHECK(kind_of(R"({"kind":"quantum"})") == ErrorKind::parse_error);
  CHECK(kind_of(R"({"generators":[[1,0]]})") == ErrorKind::parse_error);
  CHECK(kind_of(R"({"kind":"cayley","table":[[0,1],[1,1]]})") == ErrorKind::not_a_group);
  CHECK(kind_of(R"({"kind":"permutation","generators":[[1,2,0]],"order_cap":2})") == ErrorKind::closure_exceeds_cap);
}

TEST_CASE("shorthand arguments") {
  CHECK(resolve_group("Q8").order() == 8);
  CHECK(resolve_group("Phi5:3").order() == 243);
  CHECK(resolve_group("Gamma3:2").order() == 16);
  CHECK(resolve_group("dihedral:16").order() == 16);
  CHECK(resolve_group(R"({"kind":"family","name":"cyclic","order":7})").order() == 7);
  CHECK_THROWS_AS(resolve_group("no-such-group"), Error);
}

TEST_CASE("spec files") {
  const std::string path = "test_group_spec_tmp.json";
  {
    std::ofstream f(path);
    f << R"({"kind":"permutation","label":"S3 from file","generators":[[1,2,0],[1,0,2]]})";
  }
  const auto g = resolve_group(path);
  CHECK(g.label() == "S3 from file");
  CHECK(b_of_t(g).coefficient(2) == 8);
  std::remove(path.c_str());
}
