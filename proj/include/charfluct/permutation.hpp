#pragma once

#include <compare>
#include <vector>

#include "charfluct/cycle_type.hpp"

namespace charfluct {

// Bijection of {1..q} in one-line form.
class Permutation {
 public:
  explicit Permutation(int q);  // identity
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (a * b)(x) = a(b(x)): b acts first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  Permutation inverse() const;

  // Cycles including fixed points, each starting at its minimum, ordered by
  // minimum.
  std::vector<std::vector<int>> cycles() const;
  // Partition of q (fixed points included).
  CycleType cycle_type() const;
  // Minimal number of transpositions: q minus the number of cycles.
  int transposition_length() const;

  static Permutation from_cycles(int q,
                                 const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int q, int a, int b);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace charfluct
