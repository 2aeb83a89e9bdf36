#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qnp/monomial_ideal.hpp"

namespace qnp {

/// The base set of a candidate generalized discrete bi-polymatroid: a
/// nonempty family of equal-modulus exponent vectors; the shared modulus is
/// the rank.
struct BaseSet {
  BlockShape shape;
  std::vector<std::vector<int>> bases; // canonical order, deduplicated
  long long rank = 0;
};

BaseSet make_base_set(BlockShape shape, std::vector<std::vector<int>> bases);

/// Log set of the generators of a nonzero equigenerated ideal.
BaseSet base_set(const MonomialIdeal& ideal);

/// Witness of one exchange requirement: position `from` of u exceeds v, and
/// `to` (when present) is a position with a smaller exponent whose swap stays
/// in the generator set. An absent `to` records that no such position exists.
struct ExchangeWitness {
  Monomial u;
  Monomial v;
  VariableIndex from;
  std::optional<VariableIndex> to;
};

enum class ExchangeFailure { None, NotEquigenerated, MissingExchange };

struct ExchangeVerdict {
  bool passed = false;
  ExchangeFailure failure = ExchangeFailure::None;
  std::optional<ExchangeWitness> witness; // first failing pair, canonical order
};

/// The base exchange test on all ordered generator pairs: for every u, v in
/// G(I) and every position P with u_P > v_P there must be a position Q with
/// u_Q < v_Q such that the swap u - e_P + e_Q is again a generator. On base
/// sets whose members share one block-degree profile the swap always lands in
/// the source block; across mixed profiles the target may sit in another
/// block. Requires a nonzero ideal.
ExchangeVerdict is_generalized_bipolymatroidal(const MonomialIdeal& ideal);

struct D1D2Verdict {
  bool passed = false;
  std::size_t closure_size = 0;
  /// On failure, the first pair (a, b) with |a| < |b| admitting no vector
  /// strictly above a and at most the join inside the closure.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

/// Materializes the full subvector closure of the base set (erroring out past
/// `cap` vectors); D1 then holds by construction, and D2 is verified by brute
/// force over all modulus-increasing pairs.
D1D2Verdict check_d1_d2(const BaseSet& bases, std::size_t cap = 1000000);

struct LinearQuotientsVerdict {
  bool passed = false;
  std::size_t failing_index = 0; // 1-based position j whose prefix colon is not linear
};

/// Checks that each prefix colon ideal (u_1,...,u_{j-1}) : u_j is generated
/// by variables, for the given ordering of G(I) (a permutation of indices).
/// Requires a nonzero equigenerated ideal.
LinearQuotientsVerdict check_linear_quotients(const MonomialIdeal& ideal,
                                              std::span<const std::size_t> order);

enum class LqSearchStatus { Found, NoOrderExists, BudgetExhausted };

struct LqSearchResult {
  LqSearchStatus status = LqSearchStatus::BudgetExhausted;
  std::vector<std::size_t> order; // certified order when Found
  std::uint64_t nodes = 0;        // candidate extensions tested
};

/// Tries the canonical descending order first, then backtracks over
/// permutations. Budget exhaustion is reported as unknown; NoOrderExists is
/// only returned when the full search space was exhausted.
LqSearchResult find_linear_quotients_order(const MonomialIdeal& ideal,
                                           std::uint64_t budget = 1000000);

} // namespace qnp
