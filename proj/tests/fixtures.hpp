#pragma once

// Frozen expected generator sets for the published worked examples this
// toolkit reproduces, written as block-major exponent vectors. Tests compare
// computed ideals against these as sets.

#include <vector>

#include "qnp/monomial_ideal.hpp"

namespace fixtures {

using Vecs = std::vector<std::vector<int>>;

inline qnp::MonomialIdeal ideal_of(const qnp::BlockShape& shape, Vecs vecs) {
  return qnp::MonomialIdeal::from_exponent_vectors(shape, std::move(vecs));
}

inline const qnp::BlockShape shape22{{2, 2}};
inline const qnp::BlockShape shape222{{2, 2, 2}};
inline const qnp::BlockShape shape33{{3, 3}};
inline const qnp::BlockShape shape11{{1, 1}};

// I_2 of the strong quasi-bipartite graph on blocks (2,2): the four
// cross-block products, no squares.
inline const Vecs i2_22 = {
    {1, 0, 1, 0},
    {1, 0, 0, 1},
    {0, 1, 1, 0},
    {0, 1, 0, 1},
};

// Edge ideal of the same graph: cross products plus one square per vertex.
inline const Vecs edge_22 = {
    {1, 0, 1, 0},
    {1, 0, 0, 1},
    {0, 1, 1, 0},
    {0, 1, 0, 1},
    {2, 0, 0, 0},
    {0, 2, 0, 0},
    {0, 0, 2, 0},
    {0, 0, 0, 2},
};

// The ten degree profiles of I_9 on blocks (2,2,2) with cap 2, in ascending
// lexicographic order.
inline const Vecs i9_222_compositions = {
    {1, 4, 4}, {2, 3, 4}, {2, 4, 3}, {3, 2, 4}, {3, 3, 3},
    {3, 4, 2}, {4, 1, 4}, {4, 2, 3}, {4, 3, 2}, {4, 4, 1},
};

// All 50 generators of I_9 on blocks (2,2,2).
inline const Vecs i9_222 = {
    {1, 0, 2, 2, 2, 2}, {0, 1, 2, 2, 2, 2},
    {2, 0, 2, 1, 2, 2}, {2, 0, 1, 2, 2, 2}, {1, 1, 2, 1, 2, 2}, {1, 1, 1, 2, 2, 2},
    {0, 2, 2, 1, 2, 2}, {0, 2, 1, 2, 2, 2},
    {2, 0, 2, 2, 2, 1}, {2, 0, 2, 2, 1, 2}, {1, 1, 2, 2, 2, 1}, {1, 1, 2, 2, 1, 2},
    {0, 2, 2, 2, 2, 1}, {0, 2, 2, 2, 1, 2},
    {2, 1, 2, 0, 2, 2}, {2, 1, 1, 1, 2, 2}, {2, 1, 0, 2, 2, 2},
    {1, 2, 2, 0, 2, 2}, {1, 2, 1, 1, 2, 2}, {1, 2, 0, 2, 2, 2},
    {2, 1, 2, 1, 2, 1}, {2, 1, 2, 1, 1, 2}, {2, 1, 1, 2, 2, 1}, {2, 1, 1, 2, 1, 2},
    {1, 2, 2, 1, 2, 1}, {1, 2, 2, 1, 1, 2}, {1, 2, 1, 2, 2, 1}, {1, 2, 1, 2, 1, 2},
    {2, 1, 2, 2, 2, 0}, {2, 1, 2, 2, 1, 1}, {2, 1, 2, 2, 0, 2},
    {1, 2, 2, 2, 2, 0}, {1, 2, 2, 2, 1, 1}, {1, 2, 2, 2, 0, 2},
    {2, 2, 1, 0, 2, 2}, {2, 2, 0, 1, 2, 2},
    {2, 2, 2, 0, 2, 1}, {2, 2, 2, 0, 1, 2}, {2, 2, 1, 1, 2, 1}, {2, 2, 1, 1, 1, 2},
    {2, 2, 0, 2, 2, 1}, {2, 2, 0, 2, 1, 2},
    {2, 2, 2, 1, 2, 0}, {2, 2, 2, 1, 1, 1}, {2, 2, 2, 1, 0, 2},
    {2, 2, 1, 2, 2, 0}, {2, 2, 1, 2, 1, 1}, {2, 2, 1, 2, 0, 2},
    {2, 2, 2, 2, 1, 0}, {2, 2, 2, 2, 0, 1},
};

// The six generators of I_11 on blocks (2,2,2).
inline const Vecs i11_222 = {
    {2, 1, 2, 2, 2, 2}, {1, 2, 2, 2, 2, 2},
    {2, 2, 2, 1, 2, 2}, {2, 2, 1, 2, 2, 2},
    {2, 2, 2, 2, 2, 1}, {2, 2, 2, 2, 1, 2},
};

inline const Vecs i11_222_compositions = {{3, 4, 4}, {4, 3, 4}, {4, 4, 3}};

// The 21 generators of I_11 squared.
inline const Vecs i11sq_222 = {
    {4, 2, 4, 4, 4, 4}, {2, 4, 4, 4, 4, 4},
    {4, 4, 4, 2, 4, 4}, {4, 4, 2, 4, 4, 4},
    {4, 4, 4, 4, 4, 2}, {4, 4, 4, 4, 2, 4},
    {3, 3, 4, 4, 4, 4},
    {4, 3, 4, 3, 4, 4}, {4, 3, 3, 4, 4, 4}, {4, 3, 4, 4, 4, 3}, {4, 3, 4, 4, 3, 4},
    {3, 4, 4, 3, 4, 4}, {3, 4, 3, 4, 4, 4}, {3, 4, 4, 4, 4, 3}, {3, 4, 4, 4, 3, 4},
    {4, 4, 3, 3, 4, 4},
    {4, 4, 4, 3, 4, 3}, {4, 4, 4, 3, 3, 4}, {4, 4, 3, 4, 4, 3}, {4, 4, 3, 4, 3, 4},
    {4, 4, 4, 4, 3, 3},
};

// The six generators of I_11 : x[1,1].
inline const Vecs colon_i11_by_x11 = {
    {1, 1, 2, 2, 2, 2}, {0, 2, 2, 2, 2, 2},
    {1, 2, 2, 1, 2, 2}, {1, 2, 1, 2, 2, 2},
    {1, 2, 2, 2, 2, 1}, {1, 2, 2, 2, 1, 2},
};

// The six generators of I_11 on blocks (3,3).
inline const Vecs i11_33 = {
    {2, 2, 1, 2, 2, 2}, {2, 1, 2, 2, 2, 2}, {1, 2, 2, 2, 2, 2},
    {2, 2, 2, 2, 2, 1}, {2, 2, 2, 1, 2, 2}, {2, 2, 2, 2, 1, 2},
};

// Localization of the ideal above at (x[1,1],x[1,2],x[2,1],x[2,2]).
inline const Vecs i11_33_localized = {
    {2, 1, 0, 2, 2, 0}, {1, 2, 0, 2, 2, 0},
    {2, 2, 0, 1, 2, 0}, {2, 2, 0, 2, 1, 0},
};

// Log-set example on blocks (2,2,2): three monomials and their exponent
// vectors.
inline const Vecs log_example_monomials = {
    {1, 0, 2, 0, 2, 0}, {3, 1, 0, 0, 0, 2}, {1, 0, 0, 0, 1, 1},
};

// Edge ideal of the two-vertex graph on blocks (1,1).
inline const Vecs edge_11 = {{1, 1}, {2, 0}, {0, 2}};

// Walk monomials of length 2 on blocks (1,1) under the default policy:
// loop-then-edge and edge-then-loop.
inline const Vecs walks_11_len2 = {{2, 1}, {1, 2}};

// Negative control: the two-generator ideal whose generators admit no
// exchange, no linear-quotients order, and whose base set fails D2.
inline const Vecs control_22 = {{1, 0, 1, 0}, {0, 1, 0, 1}};

} // namespace fixtures
