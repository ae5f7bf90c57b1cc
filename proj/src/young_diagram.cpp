#include "charfluct/young_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charfluct {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("rows must be weakly decreasing");
  }
}

int YoungDiagram::box_count() const {
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungDiagram YoungDiagram::conjugate() const {
  std::vector<int> cols;
  for (int c = 1; rows_.size() && c <= rows_[0]; ++c) {
    int count = 0;
    for (int r : rows_)
      if (r >= c) ++count;
    cols.push_back(count);
  }
  return YoungDiagram(std::move(cols));
}

YoungDiagram YoungDiagram::parse(const std::string& s) {
  if (s.empty()) return YoungDiagram();
  return YoungDiagram(CycleType::parse(s).parts());
}

std::vector<YoungDiagram> diagrams_of(int q) {
  if (q < 0) throw std::invalid_argument("negative box count");
  std::vector<YoungDiagram> out;
  std::vector<int> rows;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(rows);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      rows.push_back(part);
      self(self, remaining - part, part);
      rows.pop_back();
    }
  };
  rec(rec, q, q == 0 ? 1 : q);
  return out;
}

Profile profile(const YoungDiagram& d) {
  const auto& rows = d.rows();
  const int m = d.row_count();
  Profile p;
  for (int i = 1; i <= m + 1; ++i) {
    int len = (i <= m) ? rows[i - 1] : 0;
    bool addable = (i == 1) || rows[i - 2] > len;  // true at i = m+1
    if (addable) p.minima.push_back(len + 1 - i);
    if (i <= m) {
      int next = (i == m) ? 0 : rows[i];
      if (len > next) p.maxima.push_back(len - i);
    }
  }
  std::sort(p.minima.begin(), p.minima.end());
  std::sort(p.maxima.begin(), p.maxima.end());
  return p;
}

Int p_tilde(const YoungDiagram& d, int n) {
  if (n < 0) throw std::invalid_argument("negative moment order");
  Profile p = profile(d);
  auto power = [n](int x) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), Int(x).get_mpz_t(),
               static_cast<unsigned long>(n));
    return out;
  };
  Int total = 0;
  for (int x : p.minima) total += power(x);
  for (int y : p.maxima) total -= power(y);
  if (n == 0) total -= 1;
  return total;
}

}  // namespace charfluct
