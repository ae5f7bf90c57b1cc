#include "charfluct/k_statistics.hpp"

#include <cmath>
#include <stdexcept>

namespace charfluct {

double KStatistics::k(int order) const {
  switch (order) {
    case 1: return k1;
    case 2: return k2;
    case 3: return k3;
    case 4: return k4;
  }
  throw std::invalid_argument("order must be 1..4");
}

double KStatistics::se(int order) const {
  switch (order) {
    case 1: return se1;
    case 2: return se2;
    case 3: return se3;
    case 4: return se4;
  }
  throw std::invalid_argument("order must be 1..4");
}

namespace {

struct PointStats {
  double k1 = 0, k2 = 0, k3 = 0, k4 = 0, skew = 0, exkurt = 0;
};

PointStats point_stats(std::span<const double> xs, int order) {
  const double n = static_cast<double>(xs.size());
  PointStats s;
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= n;
  s.k1 = mean;
  if (order < 2) return s;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : xs) {
    double d = x - mean;
    double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  s.k2 = n / (n - 1) * m2;
  if (order >= 3) s.k3 = n * n / ((n - 1) * (n - 2)) * m3;
  if (order >= 4)
    s.k4 = n * n *
           ((n + 1) * m4 - 3 * (n - 1) * m2 * m2) /
           ((n - 1) * (n - 2) * (n - 3));
  if (s.k2 > 0) {
    s.skew = s.k3 / std::pow(s.k2, 1.5);
    s.exkurt = s.k4 / (s.k2 * s.k2);
  }
  return s;
}

}  // namespace

KStatistics k_statistics(std::span<const double> xs, int order,
                         int bootstrap_rounds, RngStream& rng) {
  if (order < 1 || order > 4)
    throw std::invalid_argument("order must be 1..4");
  const int n = static_cast<int>(xs.size());
  if (n < 10 * order)
    throw std::invalid_argument("need at least 10 samples per cumulant order");

  PointStats point = point_stats(xs, order);
  KStatistics out;
  out.n = n;
  out.k1 = point.k1;
  out.k2 = point.k2;
  out.k3 = point.k3;
  out.k4 = point.k4;
  out.skewness = point.skew;
  out.exkurtosis = point.exkurt;

  if (point.k2 == 0) return out;  // constant observable: zeros, zero error

  if (bootstrap_rounds > 1) {
    std::vector<double> resampled(n);
    std::vector<PointStats> rounds(bootstrap_rounds);
    for (int b = 0; b < bootstrap_rounds; ++b) {
      for (int i = 0; i < n; ++i) resampled[i] = xs[rng.uniform_int(n)];
      rounds[b] = point_stats(resampled, order);
    }
    auto stddev_of = [&](auto member) {
      double mean = 0;
      for (const auto& r : rounds) mean += r.*member;
      mean /= bootstrap_rounds;
      double var = 0;
      for (const auto& r : rounds) {
        double d = r.*member - mean;
        var += d * d;
      }
      return std::sqrt(var / (bootstrap_rounds - 1));
    };
    out.se1 = stddev_of(&PointStats::k1);
    if (order >= 2) out.se2 = stddev_of(&PointStats::k2);
    if (order >= 3) out.se3 = stddev_of(&PointStats::k3);
    if (order >= 4) out.se4 = stddev_of(&PointStats::k4);
    if (order >= 3) out.se_skewness = stddev_of(&PointStats::skew);
    if (order >= 4) out.se_exkurtosis = stddev_of(&PointStats::exkurt);
  }
  return out;
}

double sample_covariance(std::span<const double> xs,
                         std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("covariance needs paired samples");
  const double n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double acc = 0;
  for (size_t i = 0; i < xs.size(); ++i) acc += (xs[i] - mx) * (ys[i] - my);
  return acc / (n - 1);
}

}  // namespace charfluct
