#pragma once

#include <span>
#include <vector>

#include "charfluct/rng.hpp"

namespace charfluct {

// Sample-cumulant estimates with bootstrap standard errors. k1..k3 are the
// unbiased k-statistics; k4 is the standard fourth k-statistic. skewness and
// excess kurtosis are the standardized third and fourth cumulants.
struct KStatistics {
  int n = 0;
  double k1 = 0, k2 = 0, k3 = 0, k4 = 0;
  double se1 = 0, se2 = 0, se3 = 0, se4 = 0;
  double skewness = 0, exkurtosis = 0;
  double se_skewness = 0, se_exkurtosis = 0;

  double k(int order) const;
  double se(int order) const;
};

// order in 1..4; requires n >= 10 * order. A constant sample yields zero
// higher cumulants with zero error.
KStatistics k_statistics(std::span<const double> xs, int order,
                         int bootstrap_rounds, RngStream& rng);

// Sample covariance (unbiased) of paired observations.
double sample_covariance(std::span<const double> xs, std::span<const double> ys);

}  // namespace charfluct
