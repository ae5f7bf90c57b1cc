#include "charfluct/algebra_element.hpp"

#include <stdexcept>

namespace charfluct {

AlgebraElement AlgebraElement::one() {
  return term(PartialPermutation(), 1);
}

AlgebraElement AlgebraElement::term(PartialPermutation p, Rational coeff) {
  AlgebraElement out;
  out.add_term(p, coeff);
  return out;
}

Rational AlgebraElement::coefficient(const PartialPermutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const PartialPermutation& p,
                              const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(p, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      out.add_term(pa * pb, ca * cb);
    }
  }
  return out;
}

AlgebraElement disjoint_product(const AlgebraElement& a,
                                const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      if (pa.support_disjoint(pb)) out.add_term(pa * pb, ca * cb);
    }
  }
  return out;
}

int term_degree(const PartialPermutation& p) {
  return p.support_size() + static_cast<int>(p.cycles().size());
}

int AlgebraElement::degree() const {
  if (is_zero())
    throw std::logic_error("degree of the zero element is undefined");
  int deg = 0;
  for (const auto& [p, c] : terms_) deg = std::max(deg, term_degree(p));
  return deg;
}

Rational AlgebraElement::expectation(int q, const CharacterFn& chi) const {
  Rational out = 0;
  for (const auto& [p, c] : terms_) out += c * chi(p.underlying_class(q));
  return out;
}

nlohmann::json AlgebraElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : terms_) {
    nlohmann::json t;
    t["support"] = p.support();
    t["cycles"] = p.cycles();
    t["coeff"] = fraction_string(c);
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement AlgebraElement::from_json(const nlohmann::json& j) {
  AlgebraElement out;
  for (const auto& t : j.at("terms")) {
    auto cycles = t.at("cycles").get<std::vector<std::vector<int>>>();
    auto support = t.at("support").get<std::vector<int>>();
    // from_cycles rebuilds the support from the cycles; fixed points show up
    // as singleton cycles so no extra support is needed, but validate.
    PartialPermutation p = PartialPermutation::from_cycles(cycles);
    if (p.support() != support)
      throw std::invalid_argument("inconsistent support in serialized term");
    out.add_term(p, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace charfluct
