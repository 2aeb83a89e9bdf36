#pragma once

#include <span>
#include <vector>

#include "qnp/monomial.hpp"

namespace qnp {

/// A monomial ideal held as its unique minimal generating set, canonically
/// sorted. The zero ideal has no generators; the unit ideal has the single
/// unit monomial. Construction always minimalizes, so the generator list is
/// an antichain under divisibility.
class MonomialIdeal {
public:
  static MonomialIdeal zero(BlockShape shape);
  static MonomialIdeal unit(BlockShape shape);

  /// Minimal generators of the ideal spanned by `raw`: divisibility-minimal
  /// elements, deduplicated, canonically sorted.
  static MonomialIdeal of(BlockShape shape, std::vector<Monomial> raw);

  /// Same, from raw exponent vectors (the bulk construction path).
  static MonomialIdeal from_exponent_vectors(BlockShape shape,
                                             std::vector<std::vector<int>> raw);

  const BlockShape& shape() const { return shape_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_unit(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  MonomialIdeal(BlockShape shape, std::vector<Monomial> gens)
      : shape_(std::move(shape)), gens_(std::move(gens)) {}

  BlockShape shape_;
  std::vector<Monomial> gens_;
};

/// A monomial prime ideal, identified with its nonempty variable set.
class MonomialPrime {
public:
  MonomialPrime(BlockShape shape, std::vector<VariableIndex> variables);

  const BlockShape& shape() const { return shape_; }
  std::span<const VariableIndex> variables() const { return vars_; }
  bool contains(VariableIndex v) const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;

private:
  BlockShape shape_;
  std::vector<VariableIndex> vars_; // sorted, unique
};

MonomialIdeal minimalize(const BlockShape& shape, std::vector<Monomial> raw);

/// Membership of the monomial in the ideal (some generator divides it).
bool contains(const MonomialIdeal& ideal, const Monomial& m);

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// k-fold product, k >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

/// Colon ideal I : u, computed generator-wise as g / gcd(g, u).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// Monomial localization: substitute 1 for every variable outside the prime
/// (zero those exponents), then minimalize. May yield the unit ideal.
MonomialIdeal localize(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Equality of canonical generator sets; throws on shape mismatch.
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

/// True iff all generators share one modulus (vacuously true for the zero
/// ideal).
bool is_equigenerated(const MonomialIdeal& ideal);

} // namespace qnp
