#include "doctest.h"

#include <random>

#include "qnp/text_io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace qnp;

TEST_CASE("monomial text format") {
  Monomial m(fixtures::shape222, {1, 0, 2, 2, 2, 2});
  CHECK(to_text(m) == "x[1,1]*x[2,1]^2*x[2,2]^2*x[3,1]^2*x[3,2]^2");
  CHECK(to_text(unit_monomial(fixtures::shape22)) == "1");
  CHECK(parse_monomial(fixtures::shape222, "x[1,1]*x[2,1]^2*x[2,2]^2*x[3,1]^2*x[3,2]^2") == m);
  CHECK(parse_monomial(fixtures::shape22, "1") == unit_monomial(fixtures::shape22));
  CHECK(parse_monomial(fixtures::shape22, " x[1,1] * x[2,1] ") ==
        Monomial(fixtures::shape22, {1, 0, 1, 0}));
  // repeated factors accumulate
  CHECK(parse_monomial(fixtures::shape22, "x[1,1]*x[1,1]") ==
        Monomial(fixtures::shape22, {2, 0, 0, 0}));

  CHECK_THROWS_AS(parse_monomial(fixtures::shape22, "x[3,1]"), std::out_of_range);
  CHECK_THROWS_AS(parse_monomial(fixtures::shape22, "x[1,1]^-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial(fixtures::shape22, "y[1,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_monomial(fixtures::shape22, "x[1,1]*"), std::invalid_argument);
}

TEST_CASE("exponent vector format") {
  Monomial m(fixtures::shape222, {2, 1, 2, 2, 2, 2});
  CHECK(exponents_to_text(m) == "(2,1|2,2|2,2)");
  CHECK(parse_exponent_vector(fixtures::shape222, "(2,1|2,2|2,2)") == m.exponents());
  CHECK(exponents_to_text(unit_monomial(fixtures::shape22)) == "(0,0|0,0)");
  CHECK_THROWS_AS(parse_exponent_vector(fixtures::shape222, "(2,1|2,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_exponent_vector(fixtures::shape22, "(2,1|2,-2)"), std::invalid_argument);
}

TEST_CASE("variable and prime formats") {
  CHECK(to_text(VariableIndex{3, 2}) == "x[3,2]");
  CHECK(parse_variable("x[3,2]") == VariableIndex{3, 2});
  MonomialPrime p(fixtures::shape33, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
  CHECK(to_text(p) == "x[1,1],x[1,2],x[2,1],x[2,2]");
  CHECK(parse_prime(fixtures::shape33, "x[1,1],x[1,2],x[2,1],x[2,2]") == p);
  CHECK_THROWS_AS(parse_prime(fixtures::shape33, ""), std::invalid_argument);
}

TEST_CASE("ideal file round trip") {
  auto i11 = fixtures::ideal_of(fixtures::shape222, fixtures::i11_222);
  CHECK(parse_ideal_file(to_ideal_file(i11)) == i11);

  auto zero = MonomialIdeal::zero(fixtures::shape22);
  CHECK(to_ideal_file(zero) == "shape: 2,2\n");
  CHECK(parse_ideal_file(to_ideal_file(zero)) == zero);

  auto parsed = parse_ideal_file("# a comment\n\nshape: 2,2\nx[1,1]*x[2,1]  # inline comment\n\n");
  CHECK(parsed == MonomialIdeal::of(fixtures::shape22, {Monomial(fixtures::shape22, {1, 0, 1, 0})}));

  CHECK_THROWS_AS(parse_ideal_file("x[1,1]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal_file(""), std::invalid_argument);
  CHECK_THROWS_AS(load_ideal_file("/nonexistent/missing.ideal"), std::runtime_error);
}

TEST_CASE("ideal file round trip on random ideals") {
  std::mt19937 rng(404);
  for (int iter = 0; iter < 50; ++iter) {
    auto ideal = oracles::random_ideal(rng, fixtures::shape222, 6, 3);
    CHECK(parse_ideal_file(to_ideal_file(ideal)) == ideal);
  }
}

TEST_CASE("json form") {
  auto i2 = fixtures::ideal_of(fixtures::shape22, fixtures::i2_22);
  CHECK(to_json(i2) ==
        R"({"shape":[2,2],"generators":[[1,0,1,0],[1,0,0,1],[0,1,1,0],[0,1,0,1]],"warnings":[]})");
  std::vector<std::string> warnings{"w"};
  CHECK(to_json(MonomialIdeal::zero(fixtures::shape22), warnings) ==
        R"({"shape":[2,2],"generators":[],"warnings":["w"]})");
}
