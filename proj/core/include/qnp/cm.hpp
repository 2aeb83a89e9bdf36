#pragma once

#include <vector>

#include "qnp/graph_ideal.hpp"
#include "qnp/monomial_ideal.hpp"

namespace qnp {

/// A set of variables meeting the support of every generator of the ideal
/// under analysis.
struct VertexCover {
  BlockShape shape;
  std::vector<VariableIndex> members; // sorted
  bool minimal = true;
};

/// All minimal hitting sets of the generator supports, sorted by size then
/// lexicographically. Exhaustive over subsets; requires a nonzero, non-unit
/// ideal over at most 24 variables.
std::vector<VertexCover> minimal_vertex_covers(const MonomialIdeal& ideal);

/// Minimum cardinality over the minimal vertex covers.
int height(const MonomialIdeal& ideal);

/// Krull dimension of the quotient: total variables minus height.
int quotient_dimension(const MonomialIdeal& ideal);

enum class CmStatus { CohenMacaulay, Undetermined };

/// The verdict and its certificate. Cohen-Macaulayness is only certified via
/// the dimension-zero argument (height equal to the variable count, which
/// forces depth = dim = 0); anything else is reported as undetermined.
struct CmVerdict {
  CmStatus status = CmStatus::Undetermined;
  int height = 0;
  int total_variables = 0;
  int dimension = 0;
  std::vector<VertexCover> covers;
};

CmVerdict cohen_macaulay_verdict(const StrongQuasiGraph& g);

/// The same dimension-zero analysis for an arbitrary nonzero, non-unit ideal.
CmVerdict cm_analysis(const MonomialIdeal& ideal);

} // namespace qnp
