#pragma once

#include <compare>
#include <vector>

#include "charfluct/cycle_type.hpp"
#include "charfluct/permutation.hpp"

namespace charfluct {

// Pair (support, word): the word is a bijection equal to the identity
// outside the support. Points of the support may themselves be fixed;
// such length-one cycles are retained, never pruned, so the same word with
// different supports gives different values.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  // images[i] = w(support[i]); support need not be sorted on input.
  PartialPermutation(std::vector<int> support, std::vector<int> images);

  static PartialPermutation identity_on(std::vector<int> support);
  // Disjoint cycles; the support is exactly the union of the cycles' points
  // unless extra_support adds in-support fixed points.
  static PartialPermutation from_cycles(
      const std::vector<std::vector<int>>& cycles,
      const std::vector<int>& extra_support = {});

  const std::vector<int>& support() const { return support_; }
  const std::vector<int>& images() const { return images_; }
  int support_size() const { return static_cast<int>(support_.size()); }
  bool in_support(int x) const;
  int apply(int x) const;

  bool support_disjoint(const PartialPermutation& other) const;

  // (d1,w1)(d2,w2) = (d1 u d2, w1 w2), with w2 acting first.
  friend PartialPermutation operator*(const PartialPermutation& a,
                                      const PartialPermutation& b);

  // Cycles of the word restricted to the support, fixed points included;
  // each starts at its minimum, ordered by minimum.
  std::vector<std::vector<int>> cycles() const;
  // Cycle lengths including in-support fixed points; weight = |support|.
  CycleType cycle_type() const;
  // Class of the underlying word in S_q (in-support fixed points merge with
  // the untouched ones here).
  CycleType underlying_class(int q) const;
  // Minimal transposition count of the word; support plays no role.
  int word_length() const;
  Permutation to_permutation(int q) const;

  auto operator<=>(const PartialPermutation&) const = default;

 private:
  std::vector<int> support_;  // sorted ascending
  std::vector<int> images_;   // aligned with support_
};

}  // namespace charfluct
