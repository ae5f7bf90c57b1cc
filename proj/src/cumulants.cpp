#include "charfluct/cumulants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charfluct {

namespace detail {

std::vector<std::vector<std::vector<int>>> partitions_of(
    const std::vector<int>& elems) {
  std::vector<std::vector<std::vector<int>>> out;
  if (elems.empty()) return out;
  if (elems.size() == 1) {
    out.push_back({elems});
    return out;
  }
  for (const auto& pi : enumerate_partitions(static_cast<int>(elems.size()))) {
    std::vector<std::vector<int>> blocks;
    for (const auto& block : pi.blocks()) {
      std::vector<int> relabeled;
      for (int x : block) relabeled.push_back(elems[x - 1]);
      blocks.push_back(std::move(relabeled));
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

}  // namespace detail

namespace {

// Group products of all sub-tuples, memoized; the elements must commute for
// the cumulants to be meaningful, so ascending order is as good as any.
class SubsetProducts {
 public:
  explicit SubsetProducts(const std::vector<AlgebraElement>& xs) : xs_(xs) {}

  const AlgebraElement& of(const std::vector<int>& subset) {
    auto it = cache_.find(subset);
    if (it != cache_.end()) return it->second;
    AlgebraElement value;
    if (subset.size() == 1) {
      value = xs_[subset[0]];
    } else {
      std::vector<int> rest(subset.begin(), subset.end() - 1);
      value = of(rest) * xs_[subset.back()];
    }
    return cache_.emplace(subset, std::move(value)).first->second;
  }

 private:
  const std::vector<AlgebraElement>& xs_;
  std::map<std::vector<int>, AlgebraElement> cache_;
};

Rational scalar_cumulant_with(const std::vector<AlgebraElement>& xs, int q,
                              const CharacterFn& chi, bool disjoint) {
  const int n = static_cast<int>(xs.size());
  SubsetProducts group_products(xs);
  MomentFn<Rational> moment = [&](const std::vector<int>& subset) {
    if (disjoint) {
      AlgebraElement prod = xs[subset[0]];
      for (size_t i = 1; i < subset.size(); ++i)
        prod = disjoint_product(prod, xs[subset[i]]);
      return prod.expectation(q, chi);
    }
    return group_products.of(subset).expectation(q, chi);
  };
  return joint_cumulant<Rational>(
      n, moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });
}

}  // namespace

Rational natural_cumulant(const std::vector<AlgebraElement>& xs, int q,
                          const CharacterFn& chi) {
  return scalar_cumulant_with(xs, q, chi, false);
}

Rational disjoint_cumulant(const std::vector<AlgebraElement>& xs, int q,
                           const CharacterFn& chi) {
  return scalar_cumulant_with(xs, q, chi, true);
}

CumulantTable<AlgebraElement> conditional_cumulant_table(
    const std::vector<AlgebraElement>& xs) {
  const int n = static_cast<int>(xs.size());
  SubsetProducts group_products(xs);
  MomentFn<AlgebraElement> moment = [&](const std::vector<int>& subset) {
    return group_products.of(subset);
  };
  return cumulant_table<AlgebraElement>(
      n, moment, [](const AlgebraElement& a, const AlgebraElement& b) {
        return disjoint_product(a, b);
      });
}

AlgebraElement conditional_cumulant_by_inversion(
    const std::vector<AlgebraElement>& xs) {
  auto table = conditional_cumulant_table(xs);
  std::vector<int> all(xs.size());
  std::iota(all.begin(), all.end(), 0);
  return table.at(all);
}

AlgebraElement conditional_cumulant(const std::vector<SetPartition>& factors,
                                    int q) {
  AlgebraElement out;
  for (const auto& sigma :
       product_expansion(factors, ExpansionMode::ConditionalCumulant)) {
    out += sigma_of_partition(sigma, q);
  }
  return out;
}

AlgebraElement conditional_cumulant(const std::vector<CycleType>& factors,
                                    int q) {
  std::vector<SetPartition> gadgets;
  for (const auto& k : factors) gadgets.push_back(sigma_gadget(k));
  return conditional_cumulant(gadgets, q);
}

Rational brillinger_compose(int n,
                            const CumulantTable<AlgebraElement>& kid_table,
                            int q, const CharacterFn& chi) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  Rational out = 0;
  for (const auto& pi : detail::partitions_of(all)) {
    // Disjoint cumulant of the tuple of conditional block cumulants.
    std::vector<AlgebraElement> args;
    for (const auto& block : pi) args.push_back(kid_table.at(block));
    const int m = static_cast<int>(args.size());
    MomentFn<Rational> moment = [&](const std::vector<int>& subset) {
      AlgebraElement prod = args[subset[0]];
      for (size_t i = 1; i < subset.size(); ++i)
        prod = disjoint_product(prod, args[subset[i]]);
      return prod.expectation(q, chi);
    };
    out += joint_cumulant<Rational>(
        m, moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });
  }
  return out;
}

Rational brillinger_compose(const std::vector<AlgebraElement>& xs, int q,
                            const CharacterFn& chi) {
  return brillinger_compose(static_cast<int>(xs.size()),
                            conditional_cumulant_table(xs), q, chi);
}

std::vector<SetPartition> leonov_shiryaev_partitions(
    const std::vector<int>& block_sizes) {
  int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  if (total < 1) throw std::invalid_argument("empty block sizes");
  std::vector<std::vector<int>> intervals;
  int at = 0;
  for (int size : block_sizes) {
    std::vector<int> block(size);
    std::iota(block.begin(), block.end(), at + 1);
    intervals.push_back(std::move(block));
    at += size;
  }
  SetPartition interval_partition(total, std::move(intervals));
  std::vector<SetPartition> out;
  for (const auto& pi : enumerate_partitions(total)) {
    if (pi.join(interval_partition).block_count() == 1) out.push_back(pi);
  }
  return out;
}

Rational disjoint_cumulant_connected_pairs(const std::vector<int>& ls, int q,
                                           const CharacterFn& chi) {
  const int n = static_cast<int>(ls.size());
  int total = std::accumulate(ls.begin(), ls.end(), 0);
  if (total > q)
    throw std::invalid_argument(
        "disjoint cycles of these lengths do not fit in the ground set");

  // Natural cumulant tables of the fixed disjoint cycles: the moment of a
  // sub-tuple is the character on the concatenated class.
  MomentFn<Rational> cycle_moment = [&](const std::vector<int>& subset) {
    std::vector<int> parts;
    for (int i : subset) parts.push_back(ls[i]);
    return chi(CycleType(std::move(parts)).padded(q));
  };
  auto cycle_cumulants = cumulant_table<Rational>(
      n, cycle_moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });

  // Disjoint cumulants of the falling-factorial classes: every moment is a
  // falling power of q, independently of the representation.
  MomentFn<Rational> ff_moment = [&](const std::vector<int>& subset) {
    int weight = 0;
    for (int i : subset) weight += ls[i];
    return Rational(falling_factorial(q, weight));
  };
  auto ff_cumulants = cumulant_table<Rational>(
      n, ff_moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  auto partitions = detail::partitions_of(all);

  auto multiplicative = [](const CumulantTable<Rational>& table,
                           const std::vector<std::vector<int>>& mu) {
    Rational prod = 1;
    for (const auto& block : mu) prod *= table.at(block);
    return prod;
  };
  auto joined_connected = [&](const std::vector<std::vector<int>>& a,
                              const std::vector<std::vector<int>>& b) {
    // partitions_of labels are the 0-based indices; shift to {1..n}.
    std::vector<std::vector<int>> sa = a, sb = b;
    for (auto& blk : sa)
      for (int& x : blk) ++x;
    for (auto& blk : sb)
      for (int& x : blk) ++x;
    return SetPartition(n, sa).join(SetPartition(n, sb)).block_count() == 1;
  };

  Rational out = 0;
  for (const auto& pi1 : partitions) {
    for (const auto& pi2 : partitions) {
      if (!joined_connected(pi1, pi2)) continue;
      out += multiplicative(cycle_cumulants, pi1) *
             multiplicative(ff_cumulants, pi2);
    }
  }
  return out;
}

}  // namespace charfluct
