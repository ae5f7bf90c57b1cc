#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "charfluct/cycle_type.hpp"
#include "charfluct/rational.hpp"
#include "charfluct/young_diagram.hpp"

namespace charfluct {

// Asymptotic constants a model predicts. c(m) is the limit of E(R_m) q^{-m/2}
// for m >= 2; the three covariance callbacks are the limits of
//   cov_free:   Cov(R_{l1+1}, R_{l2+1}) q^{-(l1+l2)/2}   (= the class limit),
//   cov_bullet: the disjoint-product covariance at the same scale,
//   cov_cycles: Cov(sigma_1, sigma_2) q^{+(l1+l2)/2} for disjoint cycles.
// Entries are empty when no closed form is available (reports then stay
// empirical) or when a half power of the parameter is irrational.
struct PredictedLimits {
  std::function<std::optional<Rational>(int m)> c;
  std::function<std::optional<Rational>(int l1, int l2)> cov_free;
  std::function<std::optional<Rational>(int l1, int l2)> cov_bullet;
  std::function<std::optional<Rational>(int l1, int l2)> cov_cycles;
};

struct RepresentationModel {
  std::string name;
  // Normalized character at size q on a class rho with rho a partition of q.
  std::function<Rational(int q, const CycleType& rho)> character;

  enum class Sampler { None, Plancherel, SchurWeyl };
  Sampler sampler = Sampler::None;
  std::function<int(int q)> schur_weyl_dimension;  // set when SchurWeyl

  PredictedLimits limits;
};

RepresentationModel plancherel_model();
// d_q = round(sqrt(q) / p) for p > 0; p = 0 uses d_q = q^2 so that
// sqrt(q)/d_q -> 0.
RepresentationModel tensor_model(const Rational& p);
RepresentationModel tensor_model_with_dimension(std::function<int(int)> d_of_q,
                                                std::optional<Rational> p);
RepresentationModel irreducible_model(std::function<YoungDiagram(int)> shape,
                                      std::string name);

// Shipped irreducible presets, scaled to exactly q boxes.
YoungDiagram staircase_diagram(int q);
YoungDiagram rectangular_diagram(int q);

// Restriction from S_{r_q} with r_q = round(q / p) (p in (0,1]); p = 0 uses
// r_q = q^2.
RepresentationModel restrict_model(const RepresentationModel& base,
                                   const Rational& p);
RepresentationModel restrict_model(const RepresentationModel& base,
                                   std::function<int(int)> r_of_q,
                                   const Rational& p);
// Induction from S_{r_q}, r_q = round(p * q), p in (0,1].
RepresentationModel induce_model(const RepresentationModel& base,
                                 const Rational& p);
// Outer product with component sizes r1 = round(p1 * q), r2 = q - r1.
RepresentationModel outer_model(const RepresentationModel& first,
                                const RepresentationModel& second,
                                const Rational& p1);
RepresentationModel tensor_product_model(const RepresentationModel& first,
                                         const RepresentationModel& second);

// p^{halves/2} when exactly representable (integral exponent, or p a perfect
// rational square, or p in {0, 1}).
std::optional<Rational> exact_half_power(const Rational& p, int halves);

// The composition sum over r and pairs of compositions of l1 and l2 into r
// parts, weighted l1 l2 / r, of products of c at the pair sums.
std::optional<Rational> composition_sum(const PredictedLimits& limits, int l1,
                                        int l2);

// n = 1: the limit of E(R_{l+1}) q^{-(l+1)/2} for index l.
// n = 2: the limit of Cov(R_{l1+1}, R_{l2+1}) q^{-(l1+l2)/2}, computed from
// both available routes; throws std::logic_error when the routes disagree
// (a formula transcription bug). Empty when the model predicts nothing.
std::optional<Rational> predicted_limit(const RepresentationModel& model,
                                        int n, const std::vector<int>& ls);

}  // namespace charfluct
