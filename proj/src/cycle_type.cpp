#include "charfluct/cycle_type.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace charfluct {

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("cycle type parts must be >= 1");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int CycleType::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int CycleType::degree() const { return weight() + size(); }

int CycleType::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

CycleType CycleType::concat(const CycleType& other) const {
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
  return CycleType(std::move(parts));
}

CycleType CycleType::padded(int q) const {
  int w = weight();
  if (w > q) throw std::invalid_argument("cannot pad: weight exceeds q");
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), q - w, 1);
  return CycleType(std::move(parts));
}

CycleType CycleType::without_fixed_points() const {
  std::vector<int> parts;
  for (int p : parts_)
    if (p > 1) parts.push_back(p);
  return CycleType(std::move(parts));
}

std::string CycleType::str() const {
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

CycleType CycleType::parse(const std::string& s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    if (next == std::string::npos) next = s.size();
    parts.push_back(std::stoi(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return CycleType(std::move(parts));
}

}  // namespace charfluct
