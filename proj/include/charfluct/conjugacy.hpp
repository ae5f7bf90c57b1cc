#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "charfluct/algebra_element.hpp"
#include "charfluct/cycle_type.hpp"
#include "charfluct/set_partition.hpp"

namespace charfluct {

struct NotCentralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateWindingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Normalized conjugacy class indicator: sum over all injective fillings of
// rows k_1..k_m with elements of {1..q}, each filling contributing the
// product of disjoint row cycles as a partial permutation supported on the
// filled cells. Zero when q < sum(k).
AlgebraElement sigma(const CycleType& k, int q);

// Multiplicity of each partial permutation of cycle type k inside
// sigma(k, q): (prod k_j) * prod_m (multiplicity of m in k)!.
// Validated against brute-force construction before use (see tests).
Int sigma_multiplicity(const CycleType& k);

// Inverse of sigma on central elements: coefficients c_k with
// x = sum c_k sigma(k, q). Throws NotCentralError when x is not a rational
// combination of class indicators.
std::map<CycleType, Rational> decompose_in_sigma_basis(const AlgebraElement& x,
                                                       int q);

// Partition-indexed class: sum over sequences p ~ pi with p_l = q+1 of the
// matrix-entry products (transpositions off-diagonal, identity in the last
// row/column, zero on the diagonal), each term supported on the used values
// minus q+1.
AlgebraElement sigma_of_partition(const SetPartition& pi, int q);

// True when some cyclically adjacent pair of {1..n} shares a block of pi;
// exactly the case sigma_of_partition(pi, q) == 0 for every q.
bool has_degenerate_winding(const SetPartition& pi);

// Pair partition on {1,1',...,n,n'} tracing block boundaries: each primed
// point is matched with the cyclic successor inside its sorted block.
// Returned as the bijection primed -> unprimed.
class FatPartition {
 public:
  explicit FatPartition(std::vector<int> successor)
      : successor_(std::move(successor)) {}
  int n() const { return static_cast<int>(successor_.size()); }
  // Image of k' under the matching.
  int of_primed(int k) const { return successor_[k - 1]; }
  // Pairs {k', of_primed(k)} for printing/tests.
  std::vector<std::pair<int, int>> pairs() const;

 private:
  std::vector<int> successor_;
};

FatPartition fat_partition(const SetPartition& pi);

// Cycle type k with sigma_of_partition(pi, q) == sigma(k, q) for all q >= n:
// decompose fat(pi) composed with the cyclic shift into cycles; each cycle
// contributes (its length) - (its clockwise winding number). Throws
// DegenerateWindingError on one-element cycles (the zero-indicator case).
CycleType explicit_cycle_type(const SetPartition& pi);

namespace detail {
// clockwise = false flips the winding direction; only the verifier's fault
// injection uses it.
CycleType explicit_cycle_type_directed(const SetPartition& pi, bool clockwise);
}  // namespace detail

// Genus of the closed surface glued from the partition's blocks:
// 2g = n + 1 - (#blocks) - (#cycles of fat(pi) o shift).
int partition_genus(const SetPartition& pi);

enum class ExpansionMode { Disjoint, Full, ConditionalCumulant };

// Expansion of a product of partition-indexed classes over factors placed on
// consecutive ranges. Disjoint: the single glued partition. Full: all
// partitions refining-compatible with the factors whose range-last elements
// share a block. ConditionalCumulant: additionally the leftover blocks must
// connect all ranges.
std::vector<SetPartition> product_expansion(
    const std::vector<SetPartition>& factors, ExpansionMode mode);

// Same, with explicit global factors and ranges [first, last]; throws when
// the ranges fail to split {1..n} into consecutive intervals.
std::vector<SetPartition> product_expansion_ranged(
    const std::vector<SetPartition>& global_factors,
    const std::vector<std::pair<int, int>>& ranges, ExpansionMode mode);

// Canonical partition with explicit_cycle_type equal to k: one segment of
// size k_j + 1 per row, singletons inside, the segments' last elements glued
// into one block.
SetPartition sigma_gadget(const CycleType& k);

}  // namespace charfluct
