#pragma once

#include <span>
#include <vector>

#include "qnp/monomial_ideal.hpp"

namespace qnp {

/// Edge rule of the underlying complete structure: either every pair of
/// distinct blocks is joined (the default), or only consecutive blocks are.
enum class EdgeSemantics { CompleteMultipartite, ConsecutiveParts };

/// A strong quasi-n-partite graph: vertices are the variables of the shape,
/// every vertex carries a loop, and cross-block edges follow the chosen
/// semantics.
class StrongQuasiGraph {
public:
  explicit StrongQuasiGraph(BlockShape shape,
                            EdgeSemantics semantics = EdgeSemantics::CompleteMultipartite)
      : shape_(std::move(shape)), semantics_(semantics) {}

  const BlockShape& shape() const { return shape_; }
  EdgeSemantics semantics() const { return semantics_; }

  bool blocks_adjacent(int i, int j) const {
    if (i == j) return false;
    if (semantics_ == EdgeSemantics::CompleteMultipartite) return true;
    return i + 1 == j || j + 1 == i;
  }

  /// Cross-block edges as ordered (lower block first) vertex pairs.
  std::vector<std::pair<VariableIndex, VariableIndex>> edges() const;

  friend bool operator==(const StrongQuasiGraph&, const StrongQuasiGraph&) = default;

private:
  BlockShape shape_;
  EdgeSemantics semantics_;
};

/// One degree profile (q_1,...,q_n) of a generalized graph ideal summand:
/// sum q_i = t, 0 <= q_i <= b*m_i, and no single q_i carries all of t.
struct Composition {
  BlockShape shape;
  int t = 0;
  int cap = 2;
  std::vector<int> q;

  Composition(BlockShape shape_, int t_, int cap_, std::vector<int> q_);
};

/// All valid compositions in ascending lexicographic order of q.
std::vector<Composition> compositions(const BlockShape& shape, int t, int cap);

/// Veronese-type ideal in block i: all monomials supported in that block with
/// block degree q and every exponent at most cap. q = 0 yields the unit
/// ideal.
MonomialIdeal veronese_type(const BlockShape& shape, int block, int q, int cap);

/// The generalized graph ideal I_t: sum over all valid compositions of the
/// products of per-block Veronese-type ideals. Zero when no composition
/// exists. Requires t >= 2.
MonomialIdeal generalized_graph_ideal(const StrongQuasiGraph& g, int t, int cap = 2);

/// Largest t with a nonzero I_t, namely cap * N.
int max_nontrivial_degree(const StrongQuasiGraph& g, int cap = 2);

/// Edge ideal: x_u*x_v over all cross edges plus x_v^2 for every loop.
MonomialIdeal edge_ideal(const StrongQuasiGraph& g);

/// I_t^k evaluated through the power formula: sum over all weak compositions
/// (k_1,...,k_r) of k of the per-block products of Veronese factor powers.
/// Must agree with power(generalized_graph_ideal(g, t, cap), k).
MonomialIdeal power_via_compositions(const StrongQuasiGraph& g, int t, int k, int cap = 2);

enum class StepKind { Edge, Loop };

struct WalkPolicy {
  bool trail = true;    // no edge or loop traversed twice
  bool monotone = true; // block indices nondecreasing along the walk
};

/// An alternating vertex/step sequence; steps[g] joins vertices[g] and
/// vertices[g+1], and is a loop exactly when they coincide.
struct Walk {
  std::vector<VariableIndex> vertices;
  std::vector<StepKind> steps;
};

std::vector<Walk> enumerate_walks(const StrongQuasiGraph& g, int length, WalkPolicy policy = {});

/// Vertex-product monomials (degree length+1) of all walks of the given
/// length, deduplicated and canonically sorted, with monomials supported in a
/// single block removed.
std::vector<Monomial> enumerate_walk_monomials(const StrongQuasiGraph& g, int length,
                                               WalkPolicy policy = {});

} // namespace qnp
