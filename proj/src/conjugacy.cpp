#include "charfluct/conjugacy.hpp"

#include <algorithm>
#include <numeric>

namespace charfluct {

AlgebraElement sigma(const CycleType& k, int q) {
  AlgebraElement out;
  const int r = k.weight();
  if (r > q) return out;
  const auto& rows = k.parts();
  std::vector<int> cells(r);
  std::vector<char> used(q + 1, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      std::vector<std::vector<int>> cycles;
      int at = 0;
      for (int len : rows) {
        cycles.emplace_back(cells.begin() + at, cells.begin() + at + len);
        at += len;
      }
      out.add_term(PartialPermutation::from_cycles(cycles), 1);
      return;
    }
    for (int v = 1; v <= q; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cells[pos] = v;
      self(self, pos + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

Int sigma_multiplicity(const CycleType& k) {
  Int m = 1;
  for (int part : k.parts()) m *= part;
  int run = 1;
  const auto& parts = k.parts();
  for (size_t i = 1; i <= parts.size(); ++i) {
    if (i < parts.size() && parts[i] == parts[i - 1]) {
      ++run;
    } else {
      m *= factorial(run);
      run = 1;
    }
  }
  return m;
}

std::map<CycleType, Rational> decompose_in_sigma_basis(const AlgebraElement& x,
                                                       int q) {
  std::map<CycleType, Rational> coeff_of_type;
  std::map<CycleType, Int> count_of_type;
  for (const auto& [p, c] : x.terms()) {
    if (!p.support().empty() && p.support().back() > q)
      throw NotCentralError("not in the span of the class basis: support exceeds {1..q}");
    CycleType t = p.cycle_type();
    auto [it, inserted] = coeff_of_type.emplace(t, c);
    if (!inserted && it->second != c)
      throw NotCentralError("not in the span of the class basis: coefficients differ within a cycle type");
    count_of_type[t] += 1;
  }
  std::map<CycleType, Rational> out;
  for (const auto& [t, c] : coeff_of_type) {
    Int mult = sigma_multiplicity(t);
    Rational expected_count =
        Rational(falling_factorial(q, t.weight())) / Rational(mult);
    if (Rational(count_of_type[t]) != expected_count)
      throw NotCentralError("not in the span of the class basis: incomplete cycle type");
    out.emplace(t, c / Rational(mult));
  }
  return out;
}

bool has_degenerate_winding(const SetPartition& pi) {
  const int n = pi.n();
  for (int i = 1; i <= n; ++i) {
    int next = (i == n) ? 1 : i + 1;
    if (n > 1 && pi.same_block(i, next)) return true;
    if (n == 1) return true;  // single point: the lone diagonal entry
  }
  return false;
}

AlgebraElement sigma_of_partition(const SetPartition& pi, int q) {
  AlgebraElement out;
  const int l = pi.n();
  if (l == 0) return out;
  if (has_degenerate_winding(pi)) return out;

  const int last_block = pi.block_index_of(l);
  std::vector<int> free_blocks;  // all blocks except the one holding l
  for (int b = 0; b < pi.block_count(); ++b)
    if (b != last_block) free_blocks.push_back(b);

  std::vector<int> value_of_block(pi.block_count(), 0);
  value_of_block[last_block] = q + 1;
  std::vector<char> used(q + 1, 0);

  auto emit = [&]() {
    std::vector<int> support;
    support.reserve(free_blocks.size());
    for (int b : free_blocks) support.push_back(value_of_block[b]);
    std::sort(support.begin(), support.end());
    // Word = F_1 ... F_l applied right to left, F_j the matrix entry at
    // (p_j, p_{j+1 cyclically}): a transposition when both values are <= q,
    // the identity when exactly one equals q+1.
    std::vector<int> images(support.size());
    for (size_t s = 0; s < support.size(); ++s) {
      int y = support[s];
      for (int j = l; j >= 1; --j) {
        int a = value_of_block[pi.block_index_of(j)];
        int b = value_of_block[pi.block_index_of(j == l ? 1 : j + 1)];
        if (a <= q && b <= q) {
          if (y == a)
            y = b;
          else if (y == b)
            y = a;
        }
      }
      images[s] = y;
    }
    out.add_term(PartialPermutation(std::move(support), std::move(images)), 1);
  };

  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == free_blocks.size()) {
      emit();
      return;
    }
    for (int v = 1; v <= q; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      value_of_block[free_blocks[i]] = v;
      self(self, i + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::pair<int, int>> FatPartition::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n(); ++k) out.emplace_back(k, of_primed(k));
  return out;
}

FatPartition fat_partition(const SetPartition& pi) {
  std::vector<int> successor(pi.n(), 0);
  for (const auto& block : pi.blocks()) {
    for (size_t t = 0; t < block.size(); ++t) {
      successor[block[t] - 1] = block[(t + 1) % block.size()];
    }
  }
  return FatPartition(std::move(successor));
}

namespace {

// Cycles of fat(pi) composed with the shift k -> (k-1)' (cyclically), in
// traversal order.
std::vector<std::vector<int>> boundary_cycles(const SetPartition& pi) {
  const int n = pi.n();
  FatPartition fat = fat_partition(pi);
  auto step = [&](int k) { return fat.of_primed(k == 1 ? n : k - 1); };
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(n + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int y = start;
    do {
      cycle.push_back(y);
      seen[y] = 1;
      y = step(y);
    } while (y != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

namespace detail {

CycleType explicit_cycle_type_directed(const SetPartition& pi,
                                       bool clockwise) {
  const int n = pi.n();
  std::vector<int> parts;
  for (const auto& cycle : boundary_cycles(pi)) {
    if (cycle.size() == 1)
      throw DegenerateWindingError("degenerate winding at " + pi.str());
    long long total = 0;
    for (size_t t = 0; t < cycle.size(); ++t) {
      int from = cycle[t];
      int to = cycle[(t + 1) % cycle.size()];
      int step = clockwise ? from - to : to - from;
      total += (step % n + n) % n;
    }
    if (total % n != 0)
      throw std::logic_error("winding distance must be a multiple of n");
    int winds = static_cast<int>(total / n);
    int part = static_cast<int>(cycle.size()) - winds;
    if (part <= 0)
      throw DegenerateWindingError("degenerate winding at " + pi.str());
    parts.push_back(part);
  }
  return CycleType(std::move(parts));
}

}  // namespace detail

CycleType explicit_cycle_type(const SetPartition& pi) {
  return detail::explicit_cycle_type_directed(pi, true);
}

int partition_genus(const SetPartition& pi) {
  const int n = pi.n();
  int cycles = static_cast<int>(boundary_cycles(pi).size());
  int twice_genus = n + 1 - pi.block_count() - cycles;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("genus parity violated: convention bug");
  return twice_genus / 2;
}

namespace {

struct TaggedBlock {
  int range;                  // factor index
  std::vector<int> elements;  // global labels
};

std::vector<SetPartition> expand(const std::vector<TaggedBlock>& rest,
                                 std::vector<int> glued_block, int total,
                                 int n_ranges, ExpansionMode mode) {
  std::vector<SetPartition> out;
  // groups[g]: indices into rest; a group may hold at most one block per
  // range.
  std::vector<std::vector<int>> groups;
  auto emit = [&]() {
    if (mode == ExpansionMode::ConditionalCumulant) {
      // The leftover blocks joined with the ranges must form one piece.
      std::vector<int> parent(groups.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::vector<int> range_rep(n_ranges, -1);
      for (size_t g = 0; g < groups.size(); ++g) {
        for (int idx : groups[g]) {
          int r = rest[idx].range;
          if (range_rep[r] < 0)
            range_rep[r] = static_cast<int>(g);
          else
            parent[find(static_cast<int>(g))] = find(range_rep[r]);
        }
      }
      int components = 0;
      for (size_t g = 0; g < groups.size(); ++g)
        if (find(static_cast<int>(g)) == static_cast<int>(g)) ++components;
      if (components > 1) return;
    }
    std::vector<std::vector<int>> blocks;
    blocks.push_back(glued_block);
    for (const auto& group : groups) {
      std::vector<int> merged;
      for (int idx : group)
        merged.insert(merged.end(), rest[idx].elements.begin(),
                      rest[idx].elements.end());
      blocks.push_back(std::move(merged));
    }
    out.emplace_back(total, std::move(blocks));
  };
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == rest.size()) {
      emit();
      return;
    }
    // Index-based: the recursion grows `groups`, invalidating references.
    const size_t group_count = groups.size();
    for (size_t g = 0; g < group_count; ++g) {
      bool clash = false;
      for (int idx : groups[g])
        if (rest[idx].range == rest[i].range) {
          clash = true;
          break;
        }
      if (clash) continue;
      groups[g].push_back(static_cast<int>(i));
      self(self, i + 1);
      groups[g].pop_back();
    }
    groups.push_back({static_cast<int>(i)});
    self(self, i + 1);
    groups.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SetPartition> product_expansion(
    const std::vector<SetPartition>& factors, ExpansionMode mode) {
  if (factors.empty())
    throw std::invalid_argument("product_expansion: no factors");
  int total = 0;
  std::vector<int> offsets;
  for (const auto& f : factors) {
    offsets.push_back(total);
    total += f.n();
  }
  std::vector<int> glued_block;
  std::vector<TaggedBlock> rest;
  for (size_t s = 0; s < factors.size(); ++s) {
    const auto& f = factors[s];
    int last_block = f.block_index_of(f.n());
    for (int b = 0; b < f.block_count(); ++b) {
      std::vector<int> elems = f.blocks()[b];
      for (int& x : elems) x += offsets[s];
      if (b == last_block) {
        glued_block.insert(glued_block.end(), elems.begin(), elems.end());
      } else {
        rest.push_back({static_cast<int>(s), std::move(elems)});
      }
    }
  }
  if (mode == ExpansionMode::Disjoint) {
    std::vector<std::vector<int>> blocks;
    blocks.push_back(std::move(glued_block));
    for (auto& b : rest) blocks.push_back(std::move(b.elements));
    return {SetPartition(total, std::move(blocks))};
  }
  return expand(rest, std::move(glued_block), total,
                static_cast<int>(factors.size()), mode);
}

std::vector<SetPartition> product_expansion_ranged(
    const std::vector<SetPartition>& global_factors,
    const std::vector<std::pair<int, int>>& ranges, ExpansionMode mode) {
  if (global_factors.size() != ranges.size())
    throw std::invalid_argument("factor/range count mismatch");
  int expect = 1;
  std::vector<SetPartition> local;
  for (size_t s = 0; s < ranges.size(); ++s) {
    auto [first, last] = ranges[s];
    if (first != expect || last < first)
      throw std::invalid_argument(
          "ranges must split the ground set into consecutive intervals");
    expect = last + 1;
    const auto& f = global_factors[s];
    if (f.n() != last - first + 1)
      throw std::invalid_argument("factor size does not match its range");
    local.push_back(f);
  }
  return product_expansion(local, mode);
}

SetPartition sigma_gadget(const CycleType& k) {
  if (k.empty())
    throw std::invalid_argument("sigma_gadget: empty cycle type");
  std::vector<std::vector<int>> blocks;
  std::vector<int> glued;
  int at = 0;
  for (int part : k.parts()) {
    for (int i = 1; i <= part; ++i) blocks.push_back({at + i});
    glued.push_back(at + part + 1);
    at += part + 1;
  }
  blocks.push_back(std::move(glued));
  return SetPartition(at, std::move(blocks));
}

}  // namespace charfluct
