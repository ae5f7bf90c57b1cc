#include "charfluct/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charfluct {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<char> seen(n_, 0);
  int covered = 0;
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int x : block) {
      if (x < 1 || x > n_ || seen[x - 1])
        throw std::invalid_argument("blocks must partition {1..n}");
      seen[x - 1] = 1;
      ++covered;
    }
  }
  if (covered != n_) throw std::invalid_argument("blocks do not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  block_of_.assign(n_, -1);
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) block_of_[x - 1] = static_cast<int>(i);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::one_block(int n) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  return SetPartition(n, {all});
}

int SetPartition::block_index_of(int x) const {
  if (x < 1 || x > n_) throw std::out_of_range("element out of range");
  return block_of_[x - 1];
}

SetPartition SetPartition::join(const SetPartition& other) const {
  if (n_ != other.n_) throw std::invalid_argument("join: size mismatch");
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto* part : {this, &other})
    for (const auto& block : part->blocks_)
      for (size_t i = 1; i < block.size(); ++i)
        unite(block[0] - 1, block[i] - 1);
  std::vector<std::vector<int>> groups(n_);
  for (int x = 0; x < n_; ++x) groups[find(x)].push_back(x + 1);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(n_, std::move(blocks));
}

bool SetPartition::is_noncrossing() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      for (int c = b + 1; c <= n_; ++c)
        for (int d = c + 1; d <= n_; ++d)
          if (same_block(a, c) && same_block(b, d) && !same_block(a, b))
            return false;
  return true;
}

std::string SetPartition::str() const {
  std::string out = "{";
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
  }
  out += '}';
  return out;
}

SetPartition SetPartition::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::invalid_argument("partition literal must be {..|..}");
  std::vector<std::vector<int>> blocks;
  int n = 0;
  std::string body = s.substr(1, s.size() - 2);
  size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    size_t next = body.find('|', pos);
    if (next == std::string::npos) next = body.size();
    std::vector<int> block;
    size_t p = pos;
    while (p < next) {
      size_t comma = body.find(',', p);
      if (comma == std::string::npos || comma > next) comma = next;
      block.push_back(std::stoi(body.substr(p, comma - p)));
      n = std::max(n, block.back());
      p = comma + 1;
    }
    blocks.push_back(std::move(block));
    if (next == body.size()) break;
    pos = next + 1;
  }
  return SetPartition(n, std::move(blocks));
}

std::vector<SetPartition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > 12)
    throw std::invalid_argument("partition enumeration capped at n = 12");
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);  // rgs[i]: block label of element i+1
  auto rec = [&](auto&& self, int i, int next_free) -> void {
    if (i == n) {
      std::vector<std::vector<int>> blocks(next_free);
      for (int j = 0; j < n; ++j) blocks[rgs[j]].push_back(j + 1);
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int label = 0; label <= next_free; ++label) {
      rgs[i] = label;
      self(self, i + 1, label == next_free ? next_free + 1 : next_free);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace charfluct
