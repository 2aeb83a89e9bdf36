#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "qnp/block_shape.hpp"

namespace qnp {

/// Exact half-integer value, used for the L1/2 distance between exponent
/// vectors. Stored as twice the value so no precision is ever lost.
class HalfInteger {
public:
  static HalfInteger from_twice(long long t) {
    if (t < 0) throw std::invalid_argument("HalfInteger: negative");
    HalfInteger h;
    h.twice_ = t;
    return h;
  }
  static HalfInteger whole(long long k) { return from_twice(2 * k); }

  long long twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }
  long long integer_value() const {
    if (!is_integer()) throw std::logic_error("HalfInteger: not an integer");
    return twice_ / 2;
  }
  std::string str() const {
    return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
  }

  HalfInteger operator+(HalfInteger o) const { return from_twice(twice_ + o.twice_); }
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;

private:
  long long twice_ = 0;
};

/// A monomial over a BlockShape: a nonnegative exponent vector in block-major
/// order. Immutable after construction; the all-zero vector is the unit
/// monomial and prints as `1`.
class Monomial {
public:
  Monomial(BlockShape shape, std::vector<int> exponents);

  const BlockShape& shape() const { return shape_; }
  const std::vector<int>& exponents() const { return exps_; }
  int exponent(VariableIndex v) const { return exps_[static_cast<std::size_t>(flat_index(shape_, v))]; }
  int exponent_flat(int p) const { return exps_[static_cast<std::size_t>(p)]; }
  bool is_unit() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  BlockShape shape_;
  std::vector<int> exps_;
};

Monomial make_monomial(const BlockShape& shape, std::vector<int> exponents);
Monomial unit_monomial(const BlockShape& shape);
Monomial variable_monomial(const BlockShape& shape, VariableIndex v);

long long modulus(const Monomial& m);
long long block_degree(const Monomial& m, int block);

bool divides(const Monomial& u, const Monomial& v);
Monomial multiply(const Monomial& u, const Monomial& v);
Monomial quotient(const Monomial& u, const Monomial& v); // requires divides(v, u)
Monomial join(const Monomial& u, const Monomial& v);     // componentwise max
Monomial meet(const Monomial& u, const Monomial& v);     // componentwise min (gcd)

/// x[to] * (u / x[from]); `from` and `to` must lie in the same block and u
/// must have a positive exponent at `from`. Preserves modulus and all block
/// degrees.
Monomial exchange_step(const Monomial& u, VariableIndex from, VariableIndex to);

/// Half the L1 distance between the exponent vectors; an integer whenever the
/// two moduli agree.
HalfInteger distance(const Monomial& u, const Monomial& v);

/// Canonical total order: pure lexicographic on the block-major exponent
/// list, descending (larger exponent vectors come first). `less` means
/// "precedes in canonical output order".
std::strong_ordering canonical_compare(std::span<const int> a, std::span<const int> b);
std::strong_ordering canonical_compare(const Monomial& u, const Monomial& v);
bool canonical_less(const Monomial& u, const Monomial& v);

/// Exponent vectors of a set of monomials (all of one shape), in canonical
/// order. Cardinality equals the number of distinct monomials.
std::vector<std::vector<int>> log_set(std::span<const Monomial> monomials);

namespace detail {
void check_same_shape(const Monomial& u, const Monomial& v, const char* op);
int checked_add(int a, int b, const char* op);
} // namespace detail

} // namespace qnp
