#include "charfluct/rsk.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charfluct {

YoungDiagram rsk_shape(std::span<const int> word) {
  std::vector<std::vector<int>> rows;
  for (int x : word) {
    int value = x;
    for (auto& row : rows) {
      // Bump the first entry strictly greater than the incoming value.
      auto it = std::upper_bound(row.begin(), row.end(), value);
      if (it == row.end()) {
        row.push_back(value);
        value = -1;
        break;
      }
      std::swap(*it, value);
    }
    if (value != -1) rows.push_back({value});
  }
  std::vector<int> shape;
  shape.reserve(rows.size());
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return YoungDiagram(std::move(shape));
}

YoungDiagram sample_plancherel(int q, RngStream& rng) {
  if (q < 1) throw std::invalid_argument("q must be positive");
  std::vector<int> word(q);
  std::iota(word.begin(), word.end(), 1);
  for (int i = q - 1; i > 0; --i)
    std::swap(word[i], word[rng.uniform_int(i + 1)]);
  return rsk_shape(word);
}

YoungDiagram sample_schur_weyl(int q, int d, RngStream& rng) {
  if (q < 1 || d < 1) throw std::invalid_argument("q and d must be positive");
  std::vector<int> word(q);
  for (int& x : word) x = 1 + rng.uniform_int(d);
  return rsk_shape(word);
}

}  // namespace charfluct
