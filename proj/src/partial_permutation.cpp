#include "charfluct/partial_permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace charfluct {

namespace {

// Sorts (support, images) pairs by support point and validates bijectivity.
void canonicalize(std::vector<int>& support, std::vector<int>& images) {
  if (support.size() != images.size())
    throw std::invalid_argument("support/images size mismatch");
  std::vector<std::pair<int, int>> pairs(support.size());
  for (size_t i = 0; i < support.size(); ++i)
    pairs[i] = {support[i], images[i]};
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first < 1)
      throw std::invalid_argument("support points must be positive");
    if (i > 0 && pairs[i].first == pairs[i - 1].first)
      throw std::invalid_argument("duplicate support point");
    support[i] = pairs[i].first;
    images[i] = pairs[i].second;
  }
  // The word must map the support onto itself.
  std::vector<int> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (sorted_images != support)
    throw std::invalid_argument("word does not fix the complement of support");
}

}  // namespace

PartialPermutation::PartialPermutation(std::vector<int> support,
                                       std::vector<int> images)
    : support_(std::move(support)), images_(std::move(images)) {
  canonicalize(support_, images_);
}

PartialPermutation PartialPermutation::identity_on(std::vector<int> support) {
  std::vector<int> images = support;
  return PartialPermutation(std::move(support), std::move(images));
}

PartialPermutation PartialPermutation::from_cycles(
    const std::vector<std::vector<int>>& cycles,
    const std::vector<int>& extra_support) {
  std::vector<int> support;
  std::vector<int> images;
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      support.push_back(c[i]);
      images.push_back(c[(i + 1) % c.size()]);
    }
  }
  for (int x : extra_support) {
    support.push_back(x);
    images.push_back(x);
  }
  return PartialPermutation(std::move(support), std::move(images));
}

bool PartialPermutation::in_support(int x) const {
  return std::binary_search(support_.begin(), support_.end(), x);
}

int PartialPermutation::apply(int x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.end() || *it != x) return x;
  return images_[it - support_.begin()];
}

bool PartialPermutation::support_disjoint(
    const PartialPermutation& other) const {
  auto i = support_.begin();
  auto j = other.support_.begin();
  while (i != support_.end() && j != other.support_.end()) {
    if (*i == *j) return false;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return true;
}

PartialPermutation operator*(const PartialPermutation& a,
                             const PartialPermutation& b) {
  std::vector<int> support;
  support.reserve(a.support_.size() + b.support_.size());
  std::set_union(a.support_.begin(), a.support_.end(), b.support_.begin(),
                 b.support_.end(), std::back_inserter(support));
  std::vector<int> images(support.size());
  for (size_t i = 0; i < support.size(); ++i)
    images[i] = a.apply(b.apply(support[i]));
  return PartialPermutation(std::move(support), std::move(images));
}

std::vector<std::vector<int>> PartialPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(support_.size(), 0);
  for (size_t i = 0; i < support_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int y = support_[i];
    do {
      cycle.push_back(y);
      auto it = std::lower_bound(support_.begin(), support_.end(), y);
      seen[it - support_.begin()] = 1;
      y = images_[it - support_.begin()];
    } while (y != support_[i]);
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType PartialPermutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

CycleType PartialPermutation::underlying_class(int q) const {
  std::vector<int> parts;
  int moved = 0;
  for (const auto& c : cycles()) {
    if (c.size() > 1) {
      parts.push_back(static_cast<int>(c.size()));
      moved += static_cast<int>(c.size());
    }
  }
  if (moved > q) throw std::invalid_argument("word moves points beyond q");
  parts.insert(parts.end(), q - moved, 1);
  return CycleType(std::move(parts));
}

int PartialPermutation::word_length() const {
  int len = 0;
  for (const auto& c : cycles()) len += static_cast<int>(c.size()) - 1;
  return len;
}

Permutation PartialPermutation::to_permutation(int q) const {
  std::vector<int> images(q);
  for (int x = 1; x <= q; ++x) images[x - 1] = apply(x);
  return Permutation(std::move(images));
}

}  // namespace charfluct
