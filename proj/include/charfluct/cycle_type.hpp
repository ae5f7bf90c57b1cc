#pragma once

#include <compare>
#include <string>
#include <vector>

namespace charfluct {

// Multiset of cycle lengths, stored sorted descending. Rows of length 1 are
// significant and never dropped. Doubles as a partition of q when its weight
// is q (conjugacy classes, Young-diagram row data share the representation).
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);
  CycleType(std::initializer_list<int> parts)
      : CycleType(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int size() const { return static_cast<int>(parts_.size()); }

  // Sum of the parts.
  int weight() const;
  // Sum of (part + 1); the filtration degree of the class indicator.
  int degree() const;
  // Count of parts equal to v.
  int multiplicity(int v) const;

  CycleType concat(const CycleType& other) const;
  // Pads with parts equal to 1 up to total weight q.
  CycleType padded(int q) const;
  // Drops all parts equal to 1.
  CycleType without_fixed_points() const;

  // "2+1"; empty type prints as "".
  std::string str() const;
  static CycleType parse(const std::string& s);

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> parts_;
};

}  // namespace charfluct
