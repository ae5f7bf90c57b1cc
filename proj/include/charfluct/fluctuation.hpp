#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charfluct/models.hpp"
#include "charfluct/young_diagram.hpp"

namespace charfluct {

// Observables evaluated per sampled diagram, exactly, then converted to
// floating point once.
//   R<i>       free cumulant R_i of the transition measure (i >= 2)
//   sigma<l>   class-indicator value of a single l-cycle (l <= 4, through
//              the validated free-cumulant polynomials)
//   ptilde<k>  shape functional
struct Observable {
  enum class Kind { FreeCumulant, ClassValue, ShapeMoment };
  Kind kind;
  int sub;           // i, l, or k above
  std::string name;  // canonical spelling

  // Scaling index: means scale as q^{-index/2}, fluctuations as
  // q^{-(index-1)/2}.
  int index() const { return kind == Kind::ClassValue ? sub + 1 : sub; }
};

Observable parse_observable(const std::string& name);

struct SampleBatch {
  std::string model_name;
  int q = 0;
  std::uint64_t seed = 0;
  int n_samples = 0;
  std::vector<Observable> observables;
  // values[obs][sample]
  std::vector<std::vector<double>> values;
};

// Draws n samples on the given number of threads; sample s uses the RNG
// stream with index s, so results do not depend on the thread count.
SampleBatch sample_batch(const RepresentationModel& model, int q, int n,
                         const std::vector<Observable>& observables,
                         std::uint64_t seed, int threads);

struct ReportRow {
  std::string model;
  int q = 0;
  std::string observable;
  std::string statistic;
  double estimate = 0;
  double stderr_ = 0;
  std::optional<double> predicted;
  int n_samples = 0;
  std::uint64_t seed = 0;
};

// Scaled means against the predicted constants, scaled variances and
// covariances against the predicted covariance limits, and standardized
// third/fourth cumulants of each fluctuation observable.
std::vector<ReportRow> fluctuation_report(const RepresentationModel& model,
                                          const std::vector<int>& qs, int n,
                                          const std::vector<Observable>& obs,
                                          std::uint64_t seed, int threads,
                                          int bootstrap_rounds);

struct ChiSquareResult {
  double statistic = 0;
  int dof = 0;
  double p_value = 0;
  bool pass = false;
  long long n_samples = 0;
};

// Empirical sampler frequencies against the exact canonical measure.
ChiSquareResult sampler_chi_square(const RepresentationModel& model, int q,
                                   long long n, std::uint64_t seed,
                                   double significance, int threads);

// Upper regularized incomplete gamma Q(s, x); the chi-square tail.
double regularized_gamma_q(double s, double x);
double chi_square_tail(double statistic, int dof);

}  // namespace charfluct
