#include "doctest.h"

#include <random>

#include "qnp/monomial.hpp"
#include "qnp/text_io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace qnp;

namespace {
Monomial mono(const BlockShape& shape, std::vector<int> e) { return Monomial(shape, std::move(e)); }
} // namespace

TEST_CASE("block shape validation and layout") {
  BlockShape s({2, 3, 1});
  CHECK(s.blocks() == 3);
  CHECK(s.total() == 6);
  CHECK(s.block_size(2) == 3);
  CHECK(s.block_offset(3) == 5);
  CHECK(s.block_of(4) == 2);
  CHECK(flat_index(s, {3, 1}) == 5);
  CHECK(variable_at(s, 3) == VariableIndex{2, 2});
  CHECK_THROWS_AS(BlockShape({}), std::invalid_argument);
  CHECK_THROWS_AS(BlockShape({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(flat_index(s, {4, 1}), std::out_of_range);
  CHECK_THROWS_AS(flat_index(s, {1, 3}), std::out_of_range);
}

TEST_CASE("make_monomial validates input") {
  CHECK(mono(fixtures::shape22, {1, 0, 1, 0}) == multiply(variable_monomial(fixtures::shape22, {1, 1}),
                                                          variable_monomial(fixtures::shape22, {2, 1})));
  CHECK_NOTHROW(mono(fixtures::shape222, {1, 0, 2, 2, 2, 2}));
  CHECK_THROWS_AS(mono(fixtures::shape22, {1, -1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(mono(fixtures::shape22, {1, 0, 0}), std::invalid_argument);
}

TEST_CASE("modulus and block degrees") {
  Monomial m = mono(fixtures::shape222, {1, 0, 2, 2, 2, 2});
  CHECK(modulus(m) == 9);
  CHECK(block_degree(m, 1) == 1);
  CHECK(block_degree(m, 2) == 4);
  CHECK(modulus(unit_monomial(fixtures::shape222)) == 0);
  CHECK(modulus(mono(fixtures::shape222, {2, 1, 2, 2, 2, 2})) == 11);
  CHECK(block_degree(unit_monomial(fixtures::shape222), 3) == 0);
  CHECK_THROWS_AS(block_degree(m, 4), std::out_of_range);
}

TEST_CASE("divisibility basics") {
  auto u = mono(fixtures::shape22, {1, 0, 1, 0});
  auto v = mono(fixtures::shape22, {2, 0, 1, 1});
  CHECK(divides(u, v));
  CHECK_FALSE(divides(mono(fixtures::shape22, {0, 1, 0, 0}), u));
  CHECK(divides(u, u));
  CHECK_THROWS_AS(divides(u, mono(fixtures::shape11, {1, 1})), std::invalid_argument);
}

TEST_CASE("multiply, quotient, join, meet") {
  auto a = mono(fixtures::shape22, {2, 0, 1, 0});
  auto b = mono(fixtures::shape22, {1, 1, 0, 2});
  CHECK(join(a, b) == mono(fixtures::shape22, {2, 1, 1, 2}));
  CHECK(meet(a, a) == a);
  auto p = mono(fixtures::shape22, {2, 0, 1, 0});
  auto x11 = variable_monomial(fixtures::shape22, {1, 1});
  CHECK(quotient(p, x11) == mono(fixtures::shape22, {1, 0, 1, 0}));
  CHECK_THROWS_AS(quotient(x11, p), std::invalid_argument);
}

TEST_CASE("exchange_step") {
  auto u = mono(fixtures::shape222, {2, 1, 2, 2, 2, 2});
  auto stepped = exchange_step(u, {1, 1}, {1, 2});
  CHECK(stepped == mono(fixtures::shape222, {1, 2, 2, 2, 2, 2}));
  CHECK(modulus(stepped) == modulus(u));
  CHECK(exchange_step(u, {1, 1}, {1, 1}) == u);
  CHECK_THROWS_AS(exchange_step(mono(fixtures::shape22, {0, 0, 1, 0}), {1, 1}, {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(exchange_step(u, {1, 1}, {2, 1}), std::invalid_argument);
}

TEST_CASE("distance") {
  auto u = mono(fixtures::shape222, {2, 1, 2, 2, 2, 2});
  auto v = mono(fixtures::shape222, {1, 2, 2, 2, 2, 2});
  CHECK(distance(u, u) == HalfInteger::whole(0));
  CHECK(distance(u, v) == HalfInteger::whole(1));
  auto a = mono(fixtures::shape22, {2, 0, 0, 0});
  auto b = mono(fixtures::shape22, {0, 2, 0, 0});
  CHECK(distance(a, b) == HalfInteger::whole(2));
  // Half-integral when the moduli differ.
  auto c = mono(fixtures::shape22, {1, 0, 0, 0});
  CHECK_FALSE(distance(a, c).is_integer());
  CHECK(distance(a, c).str() == "1/2");
}

TEST_CASE("canonical order is descending lexicographic") {
  auto hi = mono(fixtures::shape22, {2, 1, 0, 0});
  auto lo = mono(fixtures::shape22, {1, 2, 0, 0});
  CHECK(canonical_compare(hi, lo) == std::strong_ordering::less);
  CHECK(canonical_compare(hi, hi) == std::strong_ordering::equal);

  auto i11 = fixtures::ideal_of(fixtures::shape222, fixtures::i11_222);
  CHECK(i11.generators().front() == mono(fixtures::shape222, {2, 2, 2, 2, 2, 1}));
}

TEST_CASE("log_set matches the worked example") {
  std::vector<Monomial> f;
  for (const auto& v : fixtures::log_example_monomials) f.push_back(mono(fixtures::shape222, v));
  auto logs = log_set(f);
  REQUIRE(logs.size() == 3);
  for (const auto& v : fixtures::log_example_monomials)
    CHECK(std::find(logs.begin(), logs.end(), v) != logs.end());
  CHECK(log_set({}).empty());
  std::vector<Monomial> unit{unit_monomial(fixtures::shape22)};
  CHECK(log_set(unit) == std::vector<std::vector<int>>{{0, 0, 0, 0}});
}

TEST_CASE("monomial-core invariants on random inputs") {
  std::mt19937 rng(20240811);
  const BlockShape& shape = fixtures::shape222;
  for (int iter = 0; iter < 300; ++iter) {
    auto u = oracles::random_monomial(rng, shape, 3);
    auto v = oracles::random_monomial(rng, shape, 3);
    auto w = oracles::random_monomial(rng, shape, 3);

    CHECK((divides(u, v) && divides(v, u)) == (u == v));
    CHECK(quotient(multiply(u, v), v) == u);

    // join is the least upper bound
    auto j = join(u, v);
    CHECK(divides(u, j));
    CHECK(divides(v, j));
    auto upper = join(j, w); // an arbitrary common upper bound
    CHECK(divides(j, upper));

    // distance is a metric
    CHECK((distance(u, v) == HalfInteger::whole(0)) == (u == v));
    CHECK(distance(u, v) == distance(v, u));
    CHECK(distance(u, w) <= distance(u, v) + distance(v, w));

    // total order consistent with equality
    CHECK((canonical_compare(u, v) == std::strong_ordering::equal) == (u == v));
    if (canonical_compare(u, v) == std::strong_ordering::less)
      CHECK(canonical_compare(v, u) == std::strong_ordering::greater);

    // exchange preserves modulus and block degrees
    for (int p = 0; p < shape.total(); ++p) {
      if (u.exponent_flat(p) == 0) continue;
      VariableIndex from = variable_at(shape, p);
      VariableIndex to{from.block, 1 + (from.pos % shape.block_size(from.block))};
      auto stepped = exchange_step(u, from, to);
      CHECK(modulus(stepped) == modulus(u));
      for (int blk = 1; blk <= shape.blocks(); ++blk)
        CHECK(block_degree(stepped, blk) == block_degree(u, blk));
      break;
    }
  }
}
