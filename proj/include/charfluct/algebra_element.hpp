#pragma once

#include <functional>
#include <map>
#include <string>

#include "charfluct/cycle_type.hpp"
#include "charfluct/partial_permutation.hpp"
#include "charfluct/rational.hpp"

#include <json.hpp>

namespace charfluct {

// Normalized character oracle: class of S_q -> exact rational.
using CharacterFn = std::function<Rational(const CycleType&)>;

// Finite rational linear combination of partial permutations. No zero
// coefficients are ever stored; equality is term-wise.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }
  // Identity with empty support (the unit of both products).
  static AlgebraElement one();
  static AlgebraElement term(PartialPermutation p, Rational coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<PartialPermutation, Rational>& terms() const {
    return terms_;
  }
  Rational coefficient(const PartialPermutation& p) const;

  void add_term(const PartialPermutation& p, const Rational& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& s) {
    a *= s;
    return a;
  }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    a *= s;
    return a;
  }

  // Group product, extended bilinearly.
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);
  bool operator==(const AlgebraElement&) const = default;

  // |support| + number of in-support cycles, maximized over terms.
  // Undefined on the zero element (throws).
  int degree() const;

  // Linear extension of chi over the underlying classes in S_q.
  Rational expectation(int q, const CharacterFn& chi) const;

  // Canonical form: terms sorted, supports sorted, cycle notation, "p/q"
  // coefficients; stable across runs for golden files.
  nlohmann::json to_json() const;
  static AlgebraElement from_json(const nlohmann::json& j);

 private:
  std::map<PartialPermutation, Rational> terms_;
};

// Zero when supports overlap, the usual product otherwise; bilinear.
AlgebraElement disjoint_product(const AlgebraElement& a,
                                const AlgebraElement& b);

// Filtration degree of a single partial permutation.
int term_degree(const PartialPermutation& p);

}  // namespace charfluct
