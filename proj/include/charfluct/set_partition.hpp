#pragma once

#include <compare>
#include <string>
#include <vector>

namespace charfluct {

// Partition of {1..n} into disjoint nonempty blocks. Canonical form: each
// block sorted ascending, blocks ordered by their minima.
class SetPartition {
 public:
  SetPartition() : n_(0) {}
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int n);
  static SetPartition one_block(int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  // Index into blocks() of the block containing x.
  int block_index_of(int x) const;
  bool same_block(int x, int y) const {
    return block_index_of(x) == block_index_of(y);
  }

  // Least upper bound in the partition lattice.
  SetPartition join(const SetPartition& other) const;
  bool is_noncrossing() const;

  // "{1,3|2,5,7|4|6}"
  std::string str() const;
  static SetPartition parse(const std::string& s);

  auto operator<=>(const SetPartition&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;  // 0-based block index per element
};

// All Bell(n) partitions in a fixed deterministic order (restricted growth
// strings, lexicographic). Guarded against combinatorial explosion.
std::vector<SetPartition> enumerate_partitions(int n);

}  // namespace charfluct
