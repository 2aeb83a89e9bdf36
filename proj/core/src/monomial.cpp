#include "qnp/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace qnp {

namespace detail {

void check_same_shape(const Monomial& u, const Monomial& v, const char* op) {
  if (u.shape() != v.shape())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

int checked_add(int a, int b, const char* op) {
  int r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error(std::string(op) + ": exponent overflow");
  return r;
}

} // namespace detail

Monomial::Monomial(BlockShape shape, std::vector<int> exponents)
    : shape_(std::move(shape)), exps_(std::move(exponents)) {
  if (static_cast<int>(exps_.size()) != shape_.total())
    throw std::invalid_argument("Monomial: expected " + std::to_string(shape_.total()) +
                                " exponents, got " + std::to_string(exps_.size()));
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial make_monomial(const BlockShape& shape, std::vector<int> exponents) {
  return Monomial(shape, std::move(exponents));
}

Monomial unit_monomial(const BlockShape& shape) {
  return Monomial(shape, std::vector<int>(static_cast<std::size_t>(shape.total()), 0));
}

Monomial variable_monomial(const BlockShape& shape, VariableIndex v) {
  std::vector<int> e(static_cast<std::size_t>(shape.total()), 0);
  e[static_cast<std::size_t>(flat_index(shape, v))] = 1;
  return Monomial(shape, std::move(e));
}

long long modulus(const Monomial& m) {
  long long s = 0;
  for (int e : m.exponents()) s += e;
  return s;
}

long long block_degree(const Monomial& m, int block) {
  const BlockShape& shape = m.shape();
  int begin = shape.block_offset(block);
  int end = begin + shape.block_size(block);
  long long s = 0;
  for (int p = begin; p < end; ++p) s += m.exponent_flat(p);
  return s;
}

bool divides(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "divides");
  const auto& a = u.exponents();
  const auto& b = v.exponents();
  for (std::size_t p = 0; p < a.size(); ++p)
    if (a[p] > b[p]) return false;
  return true;
}

Monomial multiply(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "multiply");
  std::vector<int> e(u.exponents());
  for (std::size_t p = 0; p < e.size(); ++p)
    e[p] = detail::checked_add(e[p], v.exponents()[p], "multiply");
  return Monomial(u.shape(), std::move(e));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "quotient");
  std::vector<int> e(u.exponents());
  for (std::size_t p = 0; p < e.size(); ++p) {
    if (v.exponents()[p] > e[p])
      throw std::invalid_argument("quotient: divisor does not divide");
    e[p] -= v.exponents()[p];
  }
  return Monomial(u.shape(), std::move(e));
}

Monomial join(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "join");
  std::vector<int> e(u.exponents());
  for (std::size_t p = 0; p < e.size(); ++p) e[p] = std::max(e[p], v.exponents()[p]);
  return Monomial(u.shape(), std::move(e));
}

Monomial meet(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "meet");
  std::vector<int> e(u.exponents());
  for (std::size_t p = 0; p < e.size(); ++p) e[p] = std::min(e[p], v.exponents()[p]);
  return Monomial(u.shape(), std::move(e));
}

Monomial exchange_step(const Monomial& u, VariableIndex from, VariableIndex to) {
  int pf = flat_index(u.shape(), from);
  int pt = flat_index(u.shape(), to);
  if (u.exponent_flat(pf) < 1)
    throw std::invalid_argument("exchange_step: zero exponent at source variable");
  if (from.block != to.block)
    throw std::invalid_argument("exchange_step: exchange must stay within one block");
  std::vector<int> e(u.exponents());
  e[static_cast<std::size_t>(pf)] -= 1;
  e[static_cast<std::size_t>(pt)] = detail::checked_add(e[static_cast<std::size_t>(pt)], 1, "exchange_step");
  return Monomial(u.shape(), std::move(e));
}

HalfInteger distance(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "distance");
  long long l1 = 0;
  for (std::size_t p = 0; p < u.exponents().size(); ++p)
    l1 += std::llabs(static_cast<long long>(u.exponents()[p]) - v.exponents()[p]);
  return HalfInteger::from_twice(l1);
}

std::strong_ordering canonical_compare(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("canonical_compare: shape mismatch");
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (a[p] != b[p]) return a[p] > b[p] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering canonical_compare(const Monomial& u, const Monomial& v) {
  detail::check_same_shape(u, v, "canonical_compare");
  return canonical_compare(std::span<const int>(u.exponents()), std::span<const int>(v.exponents()));
}

bool canonical_less(const Monomial& u, const Monomial& v) {
  return canonical_compare(u, v) == std::strong_ordering::less;
}

std::vector<std::vector<int>> log_set(std::span<const Monomial> monomials) {
  std::vector<std::vector<int>> out;
  out.reserve(monomials.size());
  for (const Monomial& m : monomials) {
    if (m.shape() != monomials.front().shape())
      throw std::invalid_argument("log_set: mixed shapes");
    out.push_back(m.exponents());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return canonical_compare(std::span<const int>(a), std::span<const int>(b)) == std::strong_ordering::less;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace qnp
