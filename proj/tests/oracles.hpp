#pragma once

// Test-side oracles and deterministic random generators, kept independent of
// the library code paths they cross-check.

#include <cstdint>
#include <random>
#include <vector>

#include "qnp/monomial_ideal.hpp"

namespace oracles {

/// Number of vectors with `parts` entries in [0, cap] summing to `total`,
/// by direct recursion.
inline long long bounded_vector_count(int parts, int total, int cap) {
  if (total < 0) return 0;
  if (parts == 0) return total == 0 ? 1 : 0;
  long long n = 0;
  for (int e = 0; e <= cap && e <= total; ++e)
    n += bounded_vector_count(parts - 1, total - e, cap);
  return n;
}

/// Portable uniform integer in [lo, hi] (uniform_int_distribution is not
/// byte-stable across standard libraries).
inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

inline qnp::Monomial random_monomial(std::mt19937& rng, const qnp::BlockShape& shape,
                                     int max_exp) {
  std::vector<int> e(static_cast<std::size_t>(shape.total()));
  for (auto& x : e) x = uniform_int(rng, 0, max_exp);
  return qnp::Monomial(shape, std::move(e));
}

inline qnp::MonomialIdeal random_ideal(std::mt19937& rng, const qnp::BlockShape& shape,
                                       int max_gens, int max_exp) {
  std::vector<qnp::Monomial> gens;
  int count = uniform_int(rng, 1, max_gens);
  for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, shape, max_exp));
  return qnp::MonomialIdeal::of(shape, std::move(gens));
}

} // namespace oracles
