#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnp {

/// Partition of the variable grid into n blocks; block i holds m_i variables
/// x[i,1],...,x[i,m_i]. Flat storage is block-major: all of block 1, then
/// block 2, and so on.
class BlockShape {
public:
  explicit BlockShape(std::vector<int> block_sizes) : sizes_(std::move(block_sizes)) {
    if (sizes_.empty())
      throw std::invalid_argument("BlockShape: at least one block required");
    offsets_.reserve(sizes_.size() + 1);
    offsets_.push_back(0);
    for (int m : sizes_) {
      if (m < 1)
        throw std::invalid_argument("BlockShape: block sizes must be positive");
      offsets_.push_back(offsets_.back() + m);
    }
  }

  int blocks() const { return static_cast<int>(sizes_.size()); }

  /// m_i, block index 1-based.
  int block_size(int i) const {
    check_block(i);
    return sizes_[static_cast<std::size_t>(i - 1)];
  }

  /// N, the total variable count.
  int total() const { return offsets_.back(); }

  /// Flat index of x[i,1].
  int block_offset(int i) const {
    check_block(i);
    return offsets_[static_cast<std::size_t>(i - 1)];
  }

  /// Block (1-based) containing the flat position p (0-based).
  int block_of(int flat) const {
    if (flat < 0 || flat >= total())
      throw std::out_of_range("BlockShape: flat index out of range");
    int i = 1;
    while (offsets_[static_cast<std::size_t>(i)] <= flat) ++i;
    return i;
  }

  const std::vector<int>& sizes() const { return sizes_; }

  friend bool operator==(const BlockShape&, const BlockShape&) = default;

private:
  void check_block(int i) const {
    if (i < 1 || i > blocks())
      throw std::out_of_range("BlockShape: block index " + std::to_string(i) +
                              " out of range for " + std::to_string(blocks()) + " blocks");
  }

  std::vector<int> sizes_;
  std::vector<int> offsets_; // prefix sums, size n+1
};

/// 1-based (block, position) address of one variable x[block,pos].
struct VariableIndex {
  int block = 1;
  int pos = 1;

  friend auto operator<=>(const VariableIndex&, const VariableIndex&) = default;
};

/// Flat 0-based position of v within shape; validates bounds.
inline int flat_index(const BlockShape& shape, VariableIndex v) {
  if (v.block < 1 || v.block > shape.blocks())
    throw std::out_of_range("variable x[" + std::to_string(v.block) + "," +
                            std::to_string(v.pos) + "]: block out of range");
  if (v.pos < 1 || v.pos > shape.block_size(v.block))
    throw std::out_of_range("variable x[" + std::to_string(v.block) + "," +
                            std::to_string(v.pos) + "]: position out of range");
  return shape.block_offset(v.block) + v.pos - 1;
}

inline VariableIndex variable_at(const BlockShape& shape, int flat) {
  int block = shape.block_of(flat);
  return VariableIndex{block, flat - shape.block_offset(block) + 1};
}

} // namespace qnp
