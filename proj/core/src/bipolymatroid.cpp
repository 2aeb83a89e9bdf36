#include "qnp/bipolymatroid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_set>

namespace qnp {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int e : v) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct U64Hash {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

bool canon_vec_less(const std::vector<int>& a, const std::vector<int>& b) {
  return canonical_compare(std::span<const int>(a), std::span<const int>(b)) ==
         std::strong_ordering::less;
}

long long vec_modulus(const std::vector<int>& v) {
  long long s = 0;
  for (int e : v) s += e;
  return s;
}

// --- nibble-packed vector kernel ------------------------------------------
//
// Vectors with at most 16 entries, each at most 7, pack into one uint64 with
// entry 0 in the highest nibble. Because every nibble stays below 8, the
// subtraction (x | HIGH) - y never borrows across nibbles, which gives
// branch-free per-entry comparisons; and the MSB-first layout makes integer
// order coincide with lexicographic order on the exponent list.

constexpr std::uint64_t kHigh = 0x8888888888888888ull;
constexpr int kMaxPackedVars = 16;
constexpr int kMaxPackedExp = 7;

inline int nibble_shift(int p) { return 4 * (kMaxPackedVars - 1 - p); }

inline std::uint64_t pack_vector(const int* e, int n) {
  std::uint64_t k = 0;
  for (int p = 0; p < n; ++p) k |= static_cast<std::uint64_t>(e[p]) << nibble_shift(p);
  return k;
}

/// High-bit-per-nibble mask of positions where x >= y (within `sel`).
inline std::uint64_t ge_mask(std::uint64_t x, std::uint64_t y, std::uint64_t sel) {
  return (((x | kHigh) - y) & kHigh) & sel;
}

/// Positions where a < b, as high nibble bits.
inline std::uint64_t lt_mask(std::uint64_t a, std::uint64_t b, std::uint64_t sel) {
  return ge_mask(a, b, sel) ^ sel;
}

inline std::uint64_t selector(int n) {
  return n == kMaxPackedVars ? kHigh : (kHigh & ~((std::uint64_t{1} << (4 * (kMaxPackedVars - n))) - 1));
}

/// Highest set bit first, so positions come out in ascending order.
inline int top_position(std::uint64_t bits) {
  return kMaxPackedVars - 1 - ((63 - __builtin_clzll(bits)) >> 2);
}

inline bool packable(int n_vars, const std::vector<int>& flat) {
  if (n_vars > kMaxPackedVars) return false;
  for (int e : flat)
    if (e > kMaxPackedExp) return false;
  return true;
}

using PairWitness = std::tuple<std::size_t, std::size_t, int>; // (iu, iv, position)

/// Exchange scan over rows [row_lo, row_hi) against all columns; returns the
/// first failing (iu, iv, p) in row-major, position-ascending order.
std::optional<PairWitness> exchange_scan_packed(const std::vector<std::uint64_t>& keys,
                                                const std::vector<std::uint64_t>& swap_masks,
                                                int n_vars, std::uint64_t sel,
                                                std::size_t row_lo, std::size_t row_hi) {
  const std::size_t count = keys.size();
  for (std::size_t iu = row_lo; iu < row_hi; ++iu) {
    const std::uint64_t a = keys[iu];
    const std::uint64_t* swaps = swap_masks.data() + iu * static_cast<std::size_t>(n_vars);
    for (std::size_t iv = 0; iv < count; ++iv) {
      if (iv == iu) continue;
      const std::uint64_t b = keys[iv];
      std::uint64_t gt = lt_mask(b, a, sel); // positions with a > b
      if (gt == 0) continue;
      const std::uint64_t lt = lt_mask(a, b, sel);
      while (gt) {
        int p = top_position(gt);
        gt &= ~(std::uint64_t{8} << nibble_shift(p));
        if ((swaps[p] & lt) == 0) return PairWitness{iu, iv, p};
      }
    }
  }
  return std::nullopt;
}

std::optional<PairWitness> exchange_failure_packed(const std::vector<int>& flat,
                                                   std::size_t count, int n_vars) {
  const std::uint64_t sel = selector(n_vars);
  std::vector<std::uint64_t> keys(count);
  std::unordered_set<std::uint64_t, U64Hash> members;
  members.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i) {
    keys[i] = pack_vector(flat.data() + i * static_cast<std::size_t>(n_vars), n_vars);
    members.insert(keys[i]);
  }

  // swap_masks[i*n + p]: high nibble bits of targets l with u - e_p + e_l in
  // the generator set.
  std::vector<std::uint64_t> swap_masks(count * static_cast<std::size_t>(n_vars), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t key = keys[i];
    for (int p = 0; p < n_vars; ++p) {
      const std::uint64_t unit_p = std::uint64_t{1} << nibble_shift(p);
      if ((key >> nibble_shift(p) & 0xf) == 0) continue;
      std::uint64_t mask = 0;
      for (int l = 0; l < n_vars; ++l) {
        if (l == p) continue;
        const std::uint64_t probe = key - unit_p + (std::uint64_t{1} << nibble_shift(l));
        if (members.count(probe)) mask |= std::uint64_t{8} << nibble_shift(l);
      }
      swap_masks[i * static_cast<std::size_t>(n_vars) + static_cast<std::size_t>(p)] = mask;
    }
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = count >= 2048 ? std::min(hw, 8u) : 1u;
  if (workers == 1)
    return exchange_scan_packed(keys, swap_masks, n_vars, sel, 0, count);

  std::vector<std::optional<PairWitness>> results(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(count, static_cast<std::size_t>(w) * chunk);
    const std::size_t hi = std::min(count, lo + chunk);
    threads.emplace_back([&, w, lo, hi] {
      results[w] = exchange_scan_packed(keys, swap_masks, n_vars, sel, lo, hi);
    });
  }
  for (auto& t : threads) t.join();
  // Chunks cover ascending row ranges, so the first non-empty result is the
  // canonical first witness.
  for (const auto& r : results)
    if (r) return r;
  return std::nullopt;
}

std::optional<PairWitness> exchange_failure_scalar(const std::vector<int>& flat,
                                                   std::size_t count, int n_vars) {
  std::unordered_set<std::vector<int>, VecHash> members;
  members.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i)
    members.insert(std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(i) * n_vars,
                                    flat.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_vars));

  std::vector<int> probe;
  auto swap_in_set = [&](const int* u, int p, int l) {
    probe.assign(u, u + n_vars);
    probe[static_cast<std::size_t>(p)] -= 1;
    probe[static_cast<std::size_t>(l)] += 1;
    return members.count(probe) != 0;
  };
  for (std::size_t iu = 0; iu < count; ++iu) {
    const int* a = flat.data() + iu * static_cast<std::size_t>(n_vars);
    for (std::size_t iv = 0; iv < count; ++iv) {
      if (iu == iv) continue;
      const int* b = flat.data() + iv * static_cast<std::size_t>(n_vars);
      for (int p = 0; p < n_vars; ++p) {
        if (a[p] <= b[p]) continue;
        bool found = false;
        for (int l = 0; l < n_vars && !found; ++l)
          if (a[l] < b[l] && swap_in_set(a, p, l)) found = true;
        if (!found) return PairWitness{iu, iv, p};
      }
    }
  }
  return std::nullopt;
}

} // namespace

BaseSet make_base_set(BlockShape shape, std::vector<std::vector<int>> bases) {
  if (bases.empty()) throw std::invalid_argument("BaseSet: must be nonempty");
  for (const auto& v : bases) {
    if (static_cast<int>(v.size()) != shape.total())
      throw std::invalid_argument("BaseSet: vector length mismatch");
    for (int e : v)
      if (e < 0) throw std::invalid_argument("BaseSet: negative entry");
  }
  long long rank = vec_modulus(bases.front());
  for (const auto& v : bases)
    if (vec_modulus(v) != rank)
      throw std::invalid_argument("BaseSet: mixed moduli; all bases must share one rank");
  std::sort(bases.begin(), bases.end(), canon_vec_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return BaseSet{std::move(shape), std::move(bases), rank};
}

BaseSet base_set(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("base_set: zero ideal has no bases");
  if (!is_equigenerated(ideal))
    throw std::invalid_argument("base_set: ideal is not generated in a single degree");
  return make_base_set(ideal.shape(), log_set(ideal.generators()));
}

ExchangeVerdict is_generalized_bipolymatroidal(const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw std::invalid_argument("is_generalized_bipolymatroidal: zero ideal");
  if (!is_equigenerated(ideal))
    return ExchangeVerdict{false, ExchangeFailure::NotEquigenerated, std::nullopt};

  const BlockShape& shape = ideal.shape();
  const int n_vars = shape.total();
  if (n_vars > 64)
    throw std::invalid_argument("is_generalized_bipolymatroidal: more than 64 variables");
  const auto gens = ideal.generators();
  const std::size_t count = gens.size();

  std::vector<int> flat(count * static_cast<std::size_t>(n_vars));
  for (std::size_t i = 0; i < count; ++i)
    std::copy(gens[i].exponents().begin(), gens[i].exponents().end(),
              flat.begin() + static_cast<std::ptrdiff_t>(i) * n_vars);

  std::optional<PairWitness> failure = packable(n_vars, flat)
                                           ? exchange_failure_packed(flat, count, n_vars)
                                           : exchange_failure_scalar(flat, count, n_vars);
  if (!failure) return ExchangeVerdict{true, ExchangeFailure::None, std::nullopt};
  auto [iu, iv, p] = *failure;
  ExchangeWitness w{gens[iu], gens[iv], variable_at(shape, p), std::nullopt};
  return ExchangeVerdict{false, ExchangeFailure::MissingExchange, std::move(w)};
}

namespace {

struct ClosureScalar {
  std::vector<std::vector<int>> elems; // canonical order
};

D1D2Verdict check_d1_d2_packed(const BaseSet& bases, std::size_t cap, int n_vars) {
  const std::uint64_t sel = selector(n_vars);
  std::unordered_set<std::uint64_t, U64Hash> closure;
  std::deque<std::uint64_t> frontier;
  for (const auto& b : bases.bases) {
    std::uint64_t key = pack_vector(b.data(), n_vars);
    if (closure.insert(key).second) frontier.push_back(key);
  }
  while (!frontier.empty()) {
    std::uint64_t key = frontier.front();
    frontier.pop_front();
    for (int p = 0; p < n_vars; ++p) {
      if ((key >> nibble_shift(p) & 0xf) == 0) continue;
      std::uint64_t child = key - (std::uint64_t{1} << nibble_shift(p));
      if (closure.insert(child).second) {
        if (closure.size() > cap)
          throw std::invalid_argument("check_d1_d2: subvector closure exceeds cap of " +
                                      std::to_string(cap));
        frontier.push_back(child);
      }
    }
  }

  // Descending integer order on MSB-first keys is the canonical order.
  std::vector<std::uint64_t> keys(closure.begin(), closure.end());
  std::sort(keys.begin(), keys.end(), std::greater<>());
  const std::size_t count = keys.size();

  std::vector<long long> mods(count);
  std::vector<std::uint64_t> up(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    long long m = 0;
    for (int p = 0; p < n_vars; ++p) m += keys[i] >> nibble_shift(p) & 0xf;
    mods[i] = m;
    std::uint64_t mask = 0;
    for (int p = 0; p < n_vars; ++p) {
      std::uint64_t parent = keys[i] + (std::uint64_t{1} << nibble_shift(p));
      if (closure.count(parent)) mask |= std::uint64_t{8} << nibble_shift(p);
    }
    up[i] = mask;
  }

  auto unpack = [&](std::uint64_t key) {
    std::vector<int> v(static_cast<std::size_t>(n_vars));
    for (int p = 0; p < n_vars; ++p)
      v[static_cast<std::size_t>(p)] = static_cast<int>(key >> nibble_shift(p) & 0xf);
    return v;
  };

  for (std::size_t ia = 0; ia < count; ++ia) {
    const std::uint64_t a = keys[ia];
    const std::uint64_t ups = up[ia];
    for (std::size_t ib = 0; ib < count; ++ib) {
      if (mods[ib] <= mods[ia]) continue;
      if ((ups & lt_mask(a, keys[ib], sel)) == 0)
        return D1D2Verdict{false, count, std::make_pair(unpack(a), unpack(keys[ib]))};
    }
  }
  return D1D2Verdict{true, count, std::nullopt};
}

D1D2Verdict check_d1_d2_scalar(const BaseSet& bases, std::size_t cap, int n_vars) {
  std::unordered_set<std::vector<int>, VecHash> closure;
  std::deque<std::vector<int>> frontier;
  for (const auto& b : bases.bases) {
    if (closure.insert(b).second) frontier.push_back(b);
  }
  while (!frontier.empty()) {
    std::vector<int> v = std::move(frontier.front());
    frontier.pop_front();
    for (int p = 0; p < n_vars; ++p) {
      if (v[static_cast<std::size_t>(p)] == 0) continue;
      std::vector<int> child = v;
      child[static_cast<std::size_t>(p)] -= 1;
      if (closure.insert(child).second) {
        if (closure.size() > cap)
          throw std::invalid_argument("check_d1_d2: subvector closure exceeds cap of " +
                                      std::to_string(cap));
        frontier.push_back(std::move(child));
      }
    }
  }

  std::vector<std::vector<int>> elems(closure.begin(), closure.end());
  std::sort(elems.begin(), elems.end(), canon_vec_less);
  const std::size_t count = elems.size();

  std::vector<long long> mods(count);
  std::vector<std::uint64_t> up(count, 0);
  {
    std::vector<int> probe;
    for (std::size_t i = 0; i < count; ++i) {
      mods[i] = vec_modulus(elems[i]);
      std::uint64_t mask = 0;
      for (int p = 0; p < n_vars; ++p) {
        probe = elems[i];
        probe[static_cast<std::size_t>(p)] += 1;
        if (closure.count(probe)) mask |= std::uint64_t{1} << p;
      }
      up[i] = mask;
    }
  }

  for (std::size_t ia = 0; ia < count; ++ia) {
    const auto& a = elems[ia];
    for (std::size_t ib = 0; ib < count; ++ib) {
      if (mods[ib] <= mods[ia]) continue;
      const auto& b = elems[ib];
      bool found = false;
      for (int p = 0; p < n_vars && !found; ++p)
        if (a[static_cast<std::size_t>(p)] < b[static_cast<std::size_t>(p)] && (up[ia] >> p & 1))
          found = true;
      if (!found) return D1D2Verdict{false, count, std::make_pair(a, b)};
    }
  }
  return D1D2Verdict{true, count, std::nullopt};
}

} // namespace

D1D2Verdict check_d1_d2(const BaseSet& bases, std::size_t cap) {
  const int n_vars = bases.shape.total();
  if (n_vars > 64) throw std::invalid_argument("check_d1_d2: more than 64 variables");
  bool pack = n_vars <= kMaxPackedVars;
  for (const auto& b : bases.bases)
    for (int e : b)
      if (e > kMaxPackedExp) pack = false;
  // D1 holds by construction in both paths; D2 reduces to one-step
  // extensions: a vector strictly between a and the join can be shrunk, by
  // D1-closedness, to some a + e_p with a_p < b_p.
  return pack ? check_d1_d2_packed(bases, cap, n_vars) : check_d1_d2_scalar(bases, cap, n_vars);
}

namespace {

/// Is (prefix) : candidate generated by variables? Standard reduction: every
/// quotient u_i / gcd(u_i, candidate) of degree >= 2 must be divisible by a
/// degree-1 quotient arising from the same prefix.
bool prefix_colon_is_linear(const std::vector<const Monomial*>& prefix, const Monomial& cand) {
  const std::size_t n = cand.exponents().size();
  std::vector<std::vector<int>> quotients;
  quotients.reserve(prefix.size());
  std::vector<int> singles; // flat positions of degree-1 quotients
  for (const Monomial* g : prefix) {
    std::vector<int> w(n);
    long long deg = 0;
    for (std::size_t p = 0; p < n; ++p) {
      int e = g->exponents()[p] - std::min(g->exponents()[p], cand.exponents()[p]);
      w[p] = e;
      deg += e;
    }
    if (deg == 1) {
      for (std::size_t p = 0; p < n; ++p)
        if (w[p] == 1) singles.push_back(static_cast<int>(p));
    }
    quotients.push_back(std::move(w));
  }
  for (const auto& w : quotients) {
    bool covered = false;
    for (int p : singles) {
      if (w[static_cast<std::size_t>(p)] >= 1) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

} // namespace

LinearQuotientsVerdict check_linear_quotients(const MonomialIdeal& ideal,
                                              std::span<const std::size_t> order) {
  if (ideal.is_zero()) throw std::invalid_argument("check_linear_quotients: zero ideal");
  if (!is_equigenerated(ideal))
    throw std::invalid_argument("check_linear_quotients: ideal is not generated in a single degree");
  const auto gens = ideal.generators();
  if (order.size() != gens.size())
    throw std::invalid_argument("check_linear_quotients: order is not a permutation");
  std::vector<char> seen(gens.size(), 0);
  for (std::size_t i : order) {
    if (i >= gens.size() || seen[i])
      throw std::invalid_argument("check_linear_quotients: order is not a permutation");
    seen[i] = 1;
  }

  std::vector<const Monomial*> prefix;
  prefix.reserve(gens.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    const Monomial& cand = gens[order[j]];
    if (j >= 1 && !prefix_colon_is_linear(prefix, cand))
      return LinearQuotientsVerdict{false, j + 1};
    prefix.push_back(&cand);
  }
  return LinearQuotientsVerdict{true, 0};
}

LqSearchResult find_linear_quotients_order(const MonomialIdeal& ideal, std::uint64_t budget) {
  if (ideal.is_zero()) throw std::invalid_argument("find_linear_quotients_order: zero ideal");
  if (!is_equigenerated(ideal))
    throw std::invalid_argument(
        "find_linear_quotients_order: ideal is not generated in a single degree");
  const auto gens = ideal.generators();
  const std::size_t count = gens.size();

  {
    std::vector<std::size_t> canonical(count);
    for (std::size_t i = 0; i < count; ++i) canonical[i] = i;
    if (check_linear_quotients(ideal, canonical).passed)
      return LqSearchResult{LqSearchStatus::Found, std::move(canonical), 0};
  }

  LqSearchResult result;
  result.nodes = 0;
  std::vector<std::size_t> chosen;
  std::vector<char> used(count, 0);
  std::vector<const Monomial*> prefix;
  bool budget_hit = false;

  auto dfs = [&](auto&& self) -> bool {
    if (chosen.size() == count) return true;
    for (std::size_t i = 0; i < count; ++i) {
      if (used[i]) continue;
      if (result.nodes >= budget) {
        budget_hit = true;
        return false;
      }
      ++result.nodes;
      if (!prefix.empty() && !prefix_colon_is_linear(prefix, gens[i])) continue;
      used[i] = 1;
      chosen.push_back(i);
      prefix.push_back(&gens[i]);
      if (self(self)) return true;
      prefix.pop_back();
      chosen.pop_back();
      used[i] = 0;
      if (budget_hit) return false;
    }
    return false;
  };

  if (dfs(dfs)) {
    result.status = LqSearchStatus::Found;
    result.order = std::move(chosen);
    return result;
  }
  result.status = budget_hit ? LqSearchStatus::BudgetExhausted : LqSearchStatus::NoOrderExists;
  return result;
}

} // namespace qnp
