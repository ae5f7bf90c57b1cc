#pragma once

#include <functional>
#include <map>
#include <vector>

#include "charfluct/algebra_element.hpp"
#include "charfluct/conjugacy.hpp"
#include "charfluct/rational.hpp"
#include "charfluct/set_partition.hpp"

namespace charfluct {

// Joint moment of the sub-tuple selected by sorted 0-based indices.
template <class V>
using MomentFn = std::function<V(const std::vector<int>&)>;

// Joint cumulants of every sub-tuple, keyed by the sorted index set. The
// inversion solves E(prod over S) = sum over partitions of S of the product
// of block cumulants, with the product supplied by the caller.
template <class V>
using CumulantTable = std::map<std::vector<int>, V>;

namespace detail {

// Set partitions of an arbitrary sorted index list.
std::vector<std::vector<std::vector<int>>> partitions_of(
    const std::vector<int>& elems);

}  // namespace detail

template <class V, class Mul>
CumulantTable<V> cumulant_table(int n, const MomentFn<V>& moment, Mul mul) {
  CumulantTable<V> table;
  // Subsets in increasing size order so every block value is ready.
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& s : subsets) {
    V k = moment(s);
    for (const auto& mu : detail::partitions_of(s)) {
      if (mu.size() < 2) continue;
      V prod = table.at(mu[0]);
      for (size_t b = 1; b < mu.size(); ++b) prod = mul(prod, table.at(mu[b]));
      k = k - prod;
    }
    table.emplace(s, std::move(k));
  }
  return table;
}

template <class V, class Mul>
V joint_cumulant(int n, const MomentFn<V>& moment, Mul mul) {
  auto table = cumulant_table<V, Mul>(n, moment, mul);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return table.at(all);
}

// Forward direction, for round-trip checks: the moment of a sub-tuple from a
// full cumulant table.
template <class V, class Mul>
V moment_from_cumulants(const std::vector<int>& subset,
                        const CumulantTable<V>& table, Mul mul) {
  bool first = true;
  V out{};
  for (const auto& mu : detail::partitions_of(subset)) {
    V prod = table.at(mu[0]);
    for (size_t b = 1; b < mu.size(); ++b) prod = mul(prod, table.at(mu[b]));
    if (first) {
      out = std::move(prod);
      first = false;
    } else {
      out = out + prod;
    }
  }
  return out;
}

// --- Cumulants of commuting algebra elements under a character state. ---

// Natural cumulants: moments through the group product.
Rational natural_cumulant(const std::vector<AlgebraElement>& xs, int q,
                          const CharacterFn& chi);
// Disjoint cumulants: moments through the disjoint product.
Rational disjoint_cumulant(const std::vector<AlgebraElement>& xs, int q,
                           const CharacterFn& chi);

// Conditional cumulants take values in the disjoint algebra: moments are the
// group products, the inversion multiplies blocks with the disjoint product.
AlgebraElement conditional_cumulant_by_inversion(
    const std::vector<AlgebraElement>& xs);
CumulantTable<AlgebraElement> conditional_cumulant_table(
    const std::vector<AlgebraElement>& xs);

// Combinatorial route: sum of partition-indexed classes over the
// conditional-cumulant expansion of the factors.
AlgebraElement conditional_cumulant(const std::vector<SetPartition>& factors,
                                    int q);
// Factors given as class indices (each row list becomes its gadget).
AlgebraElement conditional_cumulant(const std::vector<CycleType>& factors,
                                    int q);

// Natural cumulant rebuilt from the conditional and disjoint species:
// k(x_1..x_n) = sum over partitions pi of k_bullet[k_id(x_i : i in block)].
Rational brillinger_compose(const std::vector<AlgebraElement>& xs, int q,
                            const CharacterFn& chi);
Rational brillinger_compose(int n,
                            const CumulantTable<AlgebraElement>& kid_table,
                            int q, const CharacterFn& chi);

// All partitions of the union of consecutive ranges of the given sizes whose
// join with the interval partition has a single block.
std::vector<SetPartition> leonov_shiryaev_partitions(
    const std::vector<int>& block_sizes);

// Disjoint cumulant of single-cycle classes via the double-partition sum over
// connected pairs: natural cumulants of fixed disjoint cycles paired with
// disjoint cumulants of the falling-factorial classes. Requires sum(ls) <= q.
Rational disjoint_cumulant_connected_pairs(const std::vector<int>& ls, int q,
                                           const CharacterFn& chi);

}  // namespace charfluct
