#include "qnp/graph_ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qnp {

namespace {

/// All vectors of `parts` nonnegative entries, each at most cap, summing to
/// total, visited in ascending lexicographic order.
template <typename Fn>
void for_each_bounded_vector(int parts, int total, int cap, Fn&& fn) {
  std::vector<int> v(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == parts) {
      if (remaining == 0) fn(v);
      return;
    }
    int tail_cap = cap * (parts - idx - 1);
    int lo = std::max(0, remaining - tail_cap);
    int hi = std::min(cap, remaining);
    for (int e = lo; e <= hi; ++e) {
      v[static_cast<std::size_t>(idx)] = e;
      self(self, idx + 1, remaining - e);
    }
  };
  if (total >= 0) rec(rec, 0, total);
}

} // namespace

std::vector<std::pair<VariableIndex, VariableIndex>> StrongQuasiGraph::edges() const {
  std::vector<std::pair<VariableIndex, VariableIndex>> out;
  for (int i = 1; i <= shape_.blocks(); ++i)
    for (int j = i + 1; j <= shape_.blocks(); ++j) {
      if (!blocks_adjacent(i, j)) continue;
      for (int a = 1; a <= shape_.block_size(i); ++a)
        for (int b = 1; b <= shape_.block_size(j); ++b)
          out.push_back({VariableIndex{i, a}, VariableIndex{j, b}});
    }
  return out;
}

Composition::Composition(BlockShape shape_, int t_, int cap_, std::vector<int> q_)
    : shape(std::move(shape_)), t(t_), cap(cap_), q(std::move(q_)) {
  if (static_cast<int>(q.size()) != shape.blocks())
    throw std::invalid_argument("Composition: profile length mismatch");
  long long sum = 0;
  for (int i = 1; i <= shape.blocks(); ++i) {
    int qi = q[static_cast<std::size_t>(i - 1)];
    if (qi < 0 || qi > cap * shape.block_size(i))
      throw std::invalid_argument("Composition: block degree out of range");
    if (qi == t)
      throw std::invalid_argument("Composition: a single block may not carry all of t");
    sum += qi;
  }
  if (sum != t) throw std::invalid_argument("Composition: profile does not sum to t");
}

std::vector<Composition> compositions(const BlockShape& shape, int t, int cap) {
  if (t < 0) throw std::invalid_argument("compositions: t must be >= 0");
  if (cap < 1) throw std::invalid_argument("compositions: cap must be >= 1");
  std::vector<Composition> out;
  const int n = shape.blocks();
  std::vector<int> q(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == n) {
      if (remaining == 0) out.emplace_back(shape, t, cap, q);
      return;
    }
    int hi = std::min({cap * shape.block_size(idx + 1), remaining});
    for (int e = 0; e <= hi; ++e) {
      if (e == t) continue;
      q[static_cast<std::size_t>(idx)] = e;
      self(self, idx + 1, remaining - e);
    }
    q[static_cast<std::size_t>(idx)] = 0;
  };
  rec(rec, 0, t);
  return out;
}

MonomialIdeal veronese_type(const BlockShape& shape, int block, int q, int cap) {
  if (cap < 1) throw std::invalid_argument("veronese_type: cap must be >= 1");
  int m = shape.block_size(block);
  if (q < 0 || q > cap * m)
    throw std::invalid_argument("veronese_type: degree out of range for block");
  if (q == 0) return MonomialIdeal::unit(shape);
  const int offset = shape.block_offset(block);
  std::vector<std::vector<int>> vecs;
  for_each_bounded_vector(m, q, cap, [&](const std::vector<int>& local) {
    std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
    for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(offset + j)] = local[static_cast<std::size_t>(j)];
    vecs.push_back(std::move(e));
  });
  return MonomialIdeal::from_exponent_vectors(shape, std::move(vecs));
}

int max_nontrivial_degree(const StrongQuasiGraph& g, int cap) {
  return cap * g.shape().total();
}

MonomialIdeal generalized_graph_ideal(const StrongQuasiGraph& g, int t, int cap) {
  if (t < 2) throw std::invalid_argument("generalized_graph_ideal: t must be >= 2");
  const BlockShape& shape = g.shape();
  const int n = shape.blocks();
  std::vector<std::vector<int>> vecs;
  for (const Composition& comp : compositions(shape, t, cap)) {
    // Generators of one summand L_{1,q_1}...L_{n,q_n}: pick one bounded
    // vector per block. Blocks occupy disjoint variables, so the product
    // expansion is a plain cross product.
    std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
    auto rec = [&](auto&& self, int block) -> void {
      if (block > n) {
        vecs.push_back(e);
        return;
      }
      int offset = shape.block_offset(block);
      int m = shape.block_size(block);
      for_each_bounded_vector(m, comp.q[static_cast<std::size_t>(block - 1)], cap,
                              [&](const std::vector<int>& local) {
                                for (int j = 0; j < m; ++j)
                                  e[static_cast<std::size_t>(offset + j)] =
                                      local[static_cast<std::size_t>(j)];
                                self(self, block + 1);
                              });
      for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(offset + j)] = 0;
    };
    rec(rec, 1);
  }
  if (vecs.empty()) return MonomialIdeal::zero(shape);
  return MonomialIdeal::from_exponent_vectors(shape, std::move(vecs));
}

MonomialIdeal edge_ideal(const StrongQuasiGraph& g) {
  const BlockShape& shape = g.shape();
  std::vector<std::vector<int>> vecs;
  for (auto [u, v] : g.edges()) {
    std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
    e[static_cast<std::size_t>(flat_index(shape, u))] += 1;
    e[static_cast<std::size_t>(flat_index(shape, v))] += 1;
    vecs.push_back(std::move(e));
  }
  for (int p = 0; p < shape.total(); ++p) {
    std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
    e[static_cast<std::size_t>(p)] = 2;
    vecs.push_back(std::move(e));
  }
  return MonomialIdeal::from_exponent_vectors(shape, std::move(vecs));
}

MonomialIdeal power_via_compositions(const StrongQuasiGraph& g, int t, int k, int cap) {
  if (k < 1) throw std::invalid_argument("power_via_compositions: k must be >= 1");
  if (t < 2) throw std::invalid_argument("power_via_compositions: t must be >= 2");
  const BlockShape& shape = g.shape();
  const int n = shape.blocks();
  const auto comps = compositions(shape, t, cap);
  const int r = static_cast<int>(comps.size());
  if (r == 0) return MonomialIdeal::zero(shape);

  // Veronese factor powers L_{i,q}^e are shared across many weak
  // compositions; cache them per (block, degree, exponent).
  std::map<std::tuple<int, int, int>, MonomialIdeal> factor_cache;
  auto factor_power = [&](int block, int q, int e) -> const MonomialIdeal& {
    auto key = std::make_tuple(block, q, e);
    auto it = factor_cache.find(key);
    if (it == factor_cache.end()) {
      MonomialIdeal f = veronese_type(shape, block, q, cap);
      it = factor_cache.emplace(key, e == 1 ? std::move(f) : power(f, e)).first;
    }
    return it->second;
  };

  std::vector<std::vector<int>> vecs;
  std::vector<int> multiplicity(static_cast<std::size_t>(r), 0);
  auto emit_term = [&]() {
    // One summand: for each block the product of its factor powers, then the
    // cross product over blocks (disjoint variables).
    std::vector<MonomialIdeal> block_factor;
    block_factor.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
      MonomialIdeal acc = MonomialIdeal::unit(shape);
      for (int h = 0; h < r; ++h) {
        int e = multiplicity[static_cast<std::size_t>(h)];
        if (e == 0) continue;
        acc = product(acc, factor_power(i, comps[static_cast<std::size_t>(h)].q[static_cast<std::size_t>(i - 1)], e));
      }
      block_factor.push_back(std::move(acc));
    }
    std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
    auto rec = [&](auto&& self, int block) -> void {
      if (block > n) {
        vecs.push_back(e);
        return;
      }
      int offset = shape.block_offset(block);
      int m = shape.block_size(block);
      for (const Monomial& gmon : block_factor[static_cast<std::size_t>(block - 1)].generators()) {
        for (int j = 0; j < m; ++j)
          e[static_cast<std::size_t>(offset + j)] = gmon.exponent_flat(offset + j);
        self(self, block + 1);
      }
      for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(offset + j)] = 0;
    };
    rec(rec, 1);
  };
  auto rec = [&](auto&& self, int h, int remaining) -> void {
    if (h == r - 1) {
      multiplicity[static_cast<std::size_t>(h)] = remaining;
      emit_term();
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      multiplicity[static_cast<std::size_t>(h)] = e;
      self(self, h + 1, remaining - e);
    }
  };
  rec(rec, 0, k);
  return MonomialIdeal::from_exponent_vectors(shape, std::move(vecs));
}

std::vector<Walk> enumerate_walks(const StrongQuasiGraph& g, int length, WalkPolicy policy) {
  if (length < 1) throw std::invalid_argument("enumerate_walks: length must be >= 1");
  const BlockShape& shape = g.shape();
  const int n_vertices = shape.total();

  // Step ids for trail bookkeeping: loops first, then cross edges by flat
  // vertex pair.
  auto loop_id = [&](int v) { return v; };
  auto edge_id = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return n_vertices + u * n_vertices + v;
  };

  std::vector<Walk> out;
  std::vector<int> verts;
  std::vector<StepKind> steps;
  std::vector<char> used(static_cast<std::size_t>(n_vertices + n_vertices * n_vertices), 0);

  auto rec = [&](auto&& self, int current) -> void {
    if (static_cast<int>(steps.size()) == length) {
      Walk w;
      w.vertices.reserve(verts.size());
      for (int v : verts) w.vertices.push_back(variable_at(shape, v));
      w.steps = steps;
      out.push_back(std::move(w));
      return;
    }
    int cur_block = shape.block_of(current);
    for (int next = 0; next < n_vertices; ++next) {
      int next_block = shape.block_of(next);
      bool is_loop = next == current;
      if (!is_loop && !g.blocks_adjacent(cur_block, next_block)) continue;
      if (policy.monotone && next_block < cur_block) continue;
      int id = is_loop ? loop_id(current) : edge_id(current, next);
      if (policy.trail && used[static_cast<std::size_t>(id)]) continue;
      if (policy.trail) used[static_cast<std::size_t>(id)] = 1;
      verts.push_back(next);
      steps.push_back(is_loop ? StepKind::Loop : StepKind::Edge);
      self(self, next);
      steps.pop_back();
      verts.pop_back();
      if (policy.trail) used[static_cast<std::size_t>(id)] = 0;
    }
  };
  for (int start = 0; start < n_vertices; ++start) {
    verts.push_back(start);
    rec(rec, start);
    verts.pop_back();
  }
  return out;
}

std::vector<Monomial> enumerate_walk_monomials(const StrongQuasiGraph& g, int length,
                                               WalkPolicy policy) {
  const BlockShape& shape = g.shape();
  std::vector<std::vector<int>> vecs;
  for (const Walk& w : enumerate_walks(g, length, policy)) {
    std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
    for (VariableIndex v : w.vertices) e[static_cast<std::size_t>(flat_index(shape, v))] += 1;
    // Mirror the q_i != t rule: drop walks staying inside one block.
    int first_block = w.vertices.front().block;
    bool single_block = std::all_of(w.vertices.begin(), w.vertices.end(),
                                    [&](VariableIndex v) { return v.block == first_block; });
    if (!single_block) vecs.push_back(std::move(e));
  }
  std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
    return canonical_compare(std::span<const int>(a), std::span<const int>(b)) ==
           std::strong_ordering::less;
  });
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
  std::vector<Monomial> out;
  out.reserve(vecs.size());
  for (auto& v : vecs) out.emplace_back(shape, std::move(v));
  return out;
}

} // namespace qnp
