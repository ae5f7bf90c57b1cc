#pragma once

#include <map>
#include <string>
#include <vector>

#include "charfluct/cycle_type.hpp"
#include "charfluct/rational.hpp"
#include "charfluct/young_diagram.hpp"

#include <json.hpp>

namespace charfluct {

// Border-strip recursion; la and rho must be partitions of the same number.
long long mn_character(const YoungDiagram& la, const CycleType& rho);
Int hook_dimension(const YoungDiagram& la);
// prod_j j^{m_j} m_j! for rho with multiplicities m_j.
Int class_symmetry_order(const CycleType& rho);

// Irreducible characters of S_q on all (diagram, class) pairs, built once
// and immutable afterwards.
class CharacterTable {
 public:
  static CharacterTable build(int q);

  // Process-wide cache; consults the on-disk JSON cache in the directory
  // named by CHARFLUCT_CACHE_DIR (when set) before building.
  static const CharacterTable& cached(int q);

  // Exact-mode ceiling: p(14) diagrams is the largest table we build.
  static constexpr int kMaxExactQ = 14;

  int q() const { return q_; }
  const std::vector<YoungDiagram>& diagrams() const { return lambdas_; }
  const std::vector<CycleType>& classes() const { return classes_; }

  int diagram_index(const YoungDiagram& la) const;
  int class_index(const CycleType& rho) const;

  long long character(int diagram, int cls) const {
    return chi_[diagram][cls];
  }
  long long character(const YoungDiagram& la, const CycleType& rho) const;
  Rational normalized_character(const YoungDiagram& la,
                                const CycleType& rho) const;
  const Int& dimension(const YoungDiagram& la) const;
  const Int& dimension(int diagram) const { return dims_[diagram]; }
  const Int& class_size(const CycleType& rho) const;
  const Int& symmetry_order(int cls) const { return z_[cls]; }

  nlohmann::json to_json() const;
  static CharacterTable from_json(const nlohmann::json& j);

 private:
  CharacterTable() = default;

  int q_ = 0;
  std::vector<YoungDiagram> lambdas_;
  std::vector<CycleType> classes_;
  std::vector<std::vector<long long>> chi_;  // [diagram][class]
  std::vector<Int> dims_;
  std::vector<Int> class_sizes_;
  std::vector<Int> z_;
  std::map<YoungDiagram, int> lambda_index_;
  std::map<CycleType, int> class_index_;

  void finish_indexing();
};

}  // namespace charfluct
