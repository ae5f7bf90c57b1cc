#include "charfluct/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace charfluct {

Permutation::Permutation(int q) : images_(q) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
      throw std::invalid_argument("not a bijection of {1..q}");
    }
    seen[v - 1] = 1;
  }
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("size mismatch in permutation product");
  std::vector<int> images(a.size());
  for (int x = 1; x <= a.size(); ++x) images[x - 1] = a.apply(b.apply(x));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(size());
  for (int x = 1; x <= size(); ++x) images[apply(x) - 1] = x;
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size(), 0);
  for (int x = 1; x <= size(); ++x) {
    if (seen[x - 1]) continue;
    std::vector<int> cycle;
    int y = x;
    do {
      cycle.push_back(y);
      seen[y - 1] = 1;
      y = apply(y);
    } while (y != x);
    out.push_back(std::move(cycle));
  }
  return out;
}

CycleType Permutation::cycle_type() const {
  std::vector<int> parts;
  for (const auto& c : cycles()) parts.push_back(static_cast<int>(c.size()));
  return CycleType(std::move(parts));
}

int Permutation::transposition_length() const {
  return size() - static_cast<int>(cycles().size());
}

Permutation Permutation::from_cycles(
    int q, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(q);
  std::iota(images.begin(), images.end(), 1);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 1 || from > q) throw std::invalid_argument("cycle out of range");
      images[from - 1] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int q, int a, int b) {
  return from_cycles(q, {{a, b}});
}

}  // namespace charfluct
