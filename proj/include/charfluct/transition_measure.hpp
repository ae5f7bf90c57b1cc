#pragma once

#include <vector>

#include "charfluct/rational.hpp"
#include "charfluct/young_diagram.hpp"

namespace charfluct {

// Discrete probability measure attached to a profile: atoms at the profile
// minima, positive weights summing to one.
class TransitionMeasure {
 public:
  TransitionMeasure(std::vector<Rational> atoms, std::vector<Rational> weights);

  const std::vector<Rational>& atoms() const { return atoms_; }
  const std::vector<Rational>& weights() const { return weights_; }
  int size() const { return static_cast<int>(atoms_.size()); }

  Rational moment(int n) const;
  // M_1..M_N.
  std::vector<Rational> moments(int n_max) const;

 private:
  std::vector<Rational> atoms_;    // strictly increasing
  std::vector<Rational> weights_;  // positive, sum to one
};

// Weights are the residues of the rational Cauchy transform
// prod (z - maxima) / prod (z - minima) at its simple poles.
TransitionMeasure transition_measure(const YoungDiagram& d);

// Atoms scaled by p, weights unchanged.
TransitionMeasure dilate(const TransitionMeasure& mu, const Rational& p);

// Coefficient recursion from composing the Cauchy transform with its right
// inverse: M_n = sum_{k=1..n} R_k sum_{i_1+..+i_k = n-k} M_{i_1} .. M_{i_k}.
// Input and output sequences start at index 1.
std::vector<Rational> free_cumulants_from_moments(
    const std::vector<Rational>& moments);
std::vector<Rational> moments_from_free_cumulants(
    const std::vector<Rational>& cumulants);

// Moments of the transition measure straight from the profile corners via a
// truncated series expansion; avoids computing the weights.
std::vector<Rational> diagram_moments(const YoungDiagram& d, int n_max);
// R_1..R_N of the diagram's transition measure.
std::vector<Rational> diagram_free_cumulants(const YoungDiagram& d, int n_max);

}  // namespace charfluct
