#include "qnp/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace qnp {

namespace {

void check_same_shape(const MonomialIdeal& a, const MonomialIdeal& b, const char* op) {
  if (a.shape() != b.shape())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

bool exps_divide(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t p = 0; p < a.size(); ++p)
    if (a[p] > b[p]) return false;
  return true;
}

long long mod_of(const std::vector<int>& v) {
  long long s = 0;
  for (int e : v) s += e;
  return s;
}

/// Dedup, drop every vector divisible by another member, return in canonical
/// order. A divisor has strictly smaller modulus than a distinct multiple, so
/// a modulus-ascending sweep only tests against kept vectors of smaller
/// modulus; equigenerated input degenerates to plain dedup.
std::vector<std::vector<int>> minimalize_vectors(std::vector<std::vector<int>> vecs) {
  if (vecs.empty()) return vecs;

  std::sort(vecs.begin(), vecs.end(), [&](const auto& a, const auto& b) {
    long long ma = mod_of(a), mb = mod_of(b);
    if (ma != mb) return ma < mb;
    return canonical_compare(std::span<const int>(a), std::span<const int>(b)) ==
           std::strong_ordering::less;
  });
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());

  std::vector<std::vector<int>> kept;
  std::vector<long long> kept_mod;
  kept.reserve(vecs.size());
  for (auto& v : vecs) {
    long long mv = mod_of(v);
    bool dominated = false;
    for (std::size_t i = 0; i < kept.size() && kept_mod[i] < mv; ++i) {
      if (exps_divide(kept[i], v)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept_mod.push_back(mv);
      kept.push_back(std::move(v));
    }
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return canonical_compare(std::span<const int>(a), std::span<const int>(b)) ==
           std::strong_ordering::less;
  });
  return kept;
}

} // namespace

MonomialIdeal MonomialIdeal::zero(BlockShape shape) {
  return MonomialIdeal(std::move(shape), {});
}

MonomialIdeal MonomialIdeal::unit(BlockShape shape) {
  std::vector<Monomial> g;
  g.push_back(unit_monomial(shape));
  return MonomialIdeal(std::move(shape), std::move(g));
}

MonomialIdeal MonomialIdeal::from_exponent_vectors(BlockShape shape,
                                                   std::vector<std::vector<int>> raw) {
  for (const auto& v : raw) {
    if (static_cast<int>(v.size()) != shape.total())
      throw std::invalid_argument("MonomialIdeal: exponent vector length mismatch");
    for (int e : v)
      if (e < 0) throw std::invalid_argument("MonomialIdeal: negative exponent");
  }
  raw = minimalize_vectors(std::move(raw));
  std::vector<Monomial> gens;
  gens.reserve(raw.size());
  for (auto& v : raw) gens.emplace_back(shape, std::move(v));
  return MonomialIdeal(std::move(shape), std::move(gens));
}

MonomialIdeal MonomialIdeal::of(BlockShape shape, std::vector<Monomial> raw) {
  std::vector<std::vector<int>> vecs;
  vecs.reserve(raw.size());
  for (const Monomial& m : raw) {
    if (m.shape() != shape)
      throw std::invalid_argument("MonomialIdeal: mixed shapes in generator set");
    vecs.push_back(m.exponents());
  }
  return from_exponent_vectors(std::move(shape), std::move(vecs));
}

MonomialPrime::MonomialPrime(BlockShape shape, std::vector<VariableIndex> variables)
    : shape_(std::move(shape)), vars_(std::move(variables)) {
  if (vars_.empty())
    throw std::invalid_argument("MonomialPrime: variable set must be nonempty");
  for (VariableIndex v : vars_) flat_index(shape_, v); // bounds check
  std::sort(vars_.begin(), vars_.end());
  if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end())
    throw std::invalid_argument("MonomialPrime: duplicate variable");
}

bool MonomialPrime::contains(VariableIndex v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

MonomialIdeal minimalize(const BlockShape& shape, std::vector<Monomial> raw) {
  return MonomialIdeal::of(shape, std::move(raw));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (ideal.shape() != m.shape())
    throw std::invalid_argument("contains: shape mismatch");
  for (const Monomial& g : ideal.generators())
    if (divides(g, m)) return true;
  return false;
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_shape(a, b, "add");
  std::vector<std::vector<int>> vecs;
  vecs.reserve(a.size() + b.size());
  for (const Monomial& g : a.generators()) vecs.push_back(g.exponents());
  for (const Monomial& g : b.generators()) vecs.push_back(g.exponents());
  return MonomialIdeal::from_exponent_vectors(a.shape(), std::move(vecs));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_shape(a, b, "product");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.shape());
  const std::size_t n = static_cast<std::size_t>(a.shape().total());
  std::vector<std::vector<int>> vecs;
  vecs.reserve(a.size() * b.size());
  for (const Monomial& g : a.generators()) {
    for (const Monomial& h : b.generators()) {
      std::vector<int> e(n);
      for (std::size_t p = 0; p < n; ++p)
        e[p] = detail::checked_add(g.exponents()[p], h.exponents()[p], "product");
      vecs.push_back(std::move(e));
    }
  }
  return MonomialIdeal::from_exponent_vectors(a.shape(), std::move(vecs));
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
  MonomialIdeal acc = ideal;
  for (int i = 1; i < k; ++i) acc = product(acc, ideal);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (ideal.shape() != u.shape())
    throw std::invalid_argument("colon: shape mismatch");
  std::vector<std::vector<int>> vecs;
  vecs.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(g.exponents());
    for (std::size_t p = 0; p < e.size(); ++p)
      e[p] -= std::min(e[p], u.exponents()[p]); // g / gcd(g, u)
    vecs.push_back(std::move(e));
  }
  return MonomialIdeal::from_exponent_vectors(ideal.shape(), std::move(vecs));
}

MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& p) {
  if (ideal.shape() != p.shape())
    throw std::invalid_argument("localize: shape mismatch");
  const BlockShape& shape = ideal.shape();
  std::vector<char> in_prime(static_cast<std::size_t>(shape.total()), 0);
  for (VariableIndex v : p.variables())
    in_prime[static_cast<std::size_t>(flat_index(shape, v))] = 1;
  std::vector<std::vector<int>> vecs;
  vecs.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(g.exponents());
    for (std::size_t q = 0; q < e.size(); ++q)
      if (!in_prime[q]) e[q] = 0;
    vecs.push_back(std::move(e));
  }
  return MonomialIdeal::from_exponent_vectors(shape, std::move(vecs));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_shape(a, b, "equals");
  return a == b;
}

bool is_equigenerated(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return true;
  long long d = modulus(ideal.generators().front());
  for (const Monomial& g : ideal.generators())
    if (modulus(g) != d) return false;
  return true;
}

} // namespace qnp
