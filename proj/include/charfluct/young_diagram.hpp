#pragma once

#include <compare>
#include <string>
#include <vector>

#include "charfluct/cycle_type.hpp"
#include "charfluct/rational.hpp"

namespace charfluct {

class YoungDiagram {
 public:
  YoungDiagram() = default;  // empty diagram
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int box_count() const;

  YoungDiagram conjugate() const;
  // Rows as a partition of box_count().
  CycleType row_type() const { return CycleType(rows_); }

  // "4+3+1"; the empty diagram prints as "".
  std::string str() const { return row_type().str(); }
  static YoungDiagram parse(const std::string& s);

  auto operator<=>(const YoungDiagram&) const = default;

 private:
  std::vector<int> rows_;  // weakly decreasing, all positive
};

// All diagrams with q boxes, in a fixed deterministic order.
std::vector<YoungDiagram> diagrams_of(int q);

// Integer contents of the profile corners (Russian convention): minima are
// the addable corners, maxima the removable ones; they strictly interlace.
struct Profile {
  std::vector<int> minima;
  std::vector<int> maxima;
};

Profile profile(const YoungDiagram& d);

// Moments of the second derivative of the centered profile:
// sum of minima^n - sum of maxima^n - 0^n.
Int p_tilde(const YoungDiagram& d, int n);

}  // namespace charfluct
