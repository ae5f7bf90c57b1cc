#include "charfluct/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

#include "charfluct/exact.hpp"
#include "charfluct/k_statistics.hpp"
#include "charfluct/rsk.hpp"
#include "charfluct/transition_measure.hpp"

namespace charfluct {

Observable parse_observable(const std::string& name) {
  auto make = [&](Observable::Kind kind, size_t prefix_len) {
    int sub = std::stoi(name.substr(prefix_len));
    return Observable{kind, sub, name};
  };
  if (name.rfind("R", 0) == 0 && name.size() > 1 && std::isdigit(name[1])) {
    Observable o = make(Observable::Kind::FreeCumulant, 1);
    if (o.sub < 2) throw std::invalid_argument("free cumulants start at R2");
    return o;
  }
  if (name.rfind("sigma", 0) == 0) {
    Observable o = make(Observable::Kind::ClassValue, 5);
    if (o.sub < 1 || o.sub > 4)
      throw std::invalid_argument(
          "class observables are sigma1..sigma4 (longer cycles need "
          "free-cumulant polynomials beyond the validated range)");
    return o;
  }
  if (name.rfind("ptilde", 0) == 0) {
    Observable o = make(Observable::Kind::ShapeMoment, 6);
    if (o.sub < 1) throw std::invalid_argument("ptilde index must be >= 1");
    return o;
  }
  throw std::invalid_argument("unknown observable: " + name);
}

namespace {

// Single-cycle class values as polynomials in the free cumulants. These are
// validated exactly against the character recursion for all diagrams with
// q <= 10 in the test suite before anything trusts them at scale.
double class_value_from_free(int l, const std::vector<double>& r) {
  switch (l) {
    case 1: return r[2];
    case 2: return r[3];
    case 3: return r[4] + r[2];
    case 4: return r[5] + 5 * r[3];
  }
  throw std::invalid_argument("class observable out of validated range");
}

int max_free_index(const std::vector<Observable>& observables) {
  int max_index = 2;
  for (const auto& o : observables) {
    switch (o.kind) {
      case Observable::Kind::FreeCumulant:
        max_index = std::max(max_index, o.sub);
        break;
      case Observable::Kind::ClassValue:
        max_index = std::max(max_index, o.sub + 1);
        break;
      case Observable::Kind::ShapeMoment:
        break;
    }
  }
  return max_index;
}

YoungDiagram draw(const RepresentationModel& model, int q, RngStream& rng) {
  switch (model.sampler) {
    case RepresentationModel::Sampler::Plancherel:
      return sample_plancherel(q, rng);
    case RepresentationModel::Sampler::SchurWeyl:
      return sample_schur_weyl(q, model.schur_weyl_dimension(q), rng);
    case RepresentationModel::Sampler::None:
      break;
  }
  throw std::invalid_argument("model '" + model.name +
                              "' supports exact mode only; no sampler");
}

}  // namespace

SampleBatch sample_batch(const RepresentationModel& model, int q, int n,
                         const std::vector<Observable>& observables,
                         std::uint64_t seed, int threads) {
  SampleBatch batch;
  batch.model_name = model.name;
  batch.q = q;
  batch.seed = seed;
  batch.n_samples = n;
  batch.observables = observables;
  batch.values.assign(observables.size(), std::vector<double>(n, 0.0));

  const int n_free = max_free_index(observables);
  bool needs_free = false;
  for (const auto& o : observables)
    if (o.kind != Observable::Kind::ShapeMoment) needs_free = true;

  auto run = [&](int begin, int end) {
    for (int s = begin; s < end; ++s) {
      RngStream rng(seed, static_cast<std::uint64_t>(s));
      YoungDiagram la = draw(model, q, rng);
      std::vector<double> free_values;
      if (needs_free) {
        auto exact = diagram_free_cumulants(la, n_free);
        free_values.resize(n_free + 1, 0.0);
        for (int i = 1; i <= n_free; ++i)
          free_values[i] = to_double(exact[i - 1]);
      }
      for (size_t o = 0; o < observables.size(); ++o) {
        const Observable& obs = observables[o];
        double value = 0;
        switch (obs.kind) {
          case Observable::Kind::FreeCumulant:
            value = free_values[obs.sub];
            break;
          case Observable::Kind::ClassValue:
            value = class_value_from_free(obs.sub, free_values);
            break;
          case Observable::Kind::ShapeMoment:
            value = p_tilde(la, obs.sub).get_d();
            break;
        }
        batch.values[o][s] = value;
      }
    }
  };

  if (threads <= 1 || n < 2 * threads) {
    run(0, n);
  } else {
    std::vector<std::thread> pool;
    int chunk = (n + threads - 1) / threads;
    for (int begin = 0; begin < n; begin += chunk)
      pool.emplace_back(run, begin, std::min(begin + chunk, n));
    for (auto& t : pool) t.join();
  }
  return batch;
}

std::vector<ReportRow> fluctuation_report(const RepresentationModel& model,
                                          const std::vector<int>& qs, int n,
                                          const std::vector<Observable>& obs,
                                          std::uint64_t seed, int threads,
                                          int bootstrap_rounds) {
  std::vector<ReportRow> rows;
  for (int q : qs) {
    SampleBatch batch = sample_batch(model, q, n, obs, seed, threads);
    const double sq = std::sqrt(double(q));
    for (size_t o = 0; o < obs.size(); ++o) {
      const Observable& observable = obs[o];
      const int idx = observable.index();
      // Bootstrap uses a stream far outside the per-sample range.
      RngStream boot_rng(seed, 0x8000000000000000ULL + o);
      KStatistics stats =
          k_statistics(batch.values[o], 4, bootstrap_rounds, boot_rng);

      auto add = [&](const std::string& stat, double estimate, double err,
                     std::optional<double> predicted) {
        rows.push_back(ReportRow{model.name, q, observable.name, stat,
                                 estimate, err, predicted, n, seed});
      };

      double mean_scale = std::pow(sq, -idx);
      std::optional<double> mean_pred;
      if (observable.kind != Observable::Kind::ShapeMoment) {
        if (auto p = predicted_limit(model, 1, {idx - 1}))
          mean_pred = to_double(*p);
      }
      add("mean_scaled", stats.k1 * mean_scale, stats.se1 * mean_scale,
          mean_pred);

      double var_scale = std::pow(sq, -2 * (idx - 1));
      std::optional<double> var_pred;
      if (observable.kind != Observable::Kind::ShapeMoment) {
        if (auto p = predicted_limit(model, 2, {idx - 1, idx - 1}))
          var_pred = to_double(*p);
      }
      add("var_scaled", stats.k2 * var_scale, stats.se2 * var_scale, var_pred);
      add("skewness_std", stats.skewness, stats.se_skewness, 0.0);
      add("exkurtosis_std", stats.exkurtosis, stats.se_exkurtosis, 0.0);

      for (size_t o2 = o + 1; o2 < obs.size(); ++o2) {
        if (observable.kind == Observable::Kind::ShapeMoment ||
            obs[o2].kind == Observable::Kind::ShapeMoment)
          continue;
        int idx2 = obs[o2].index();
        double cov =
            sample_covariance(batch.values[o], batch.values[o2]);
        double cov_scale = std::pow(sq, -(idx - 1) - (idx2 - 1));
        std::optional<double> cov_pred;
        if (auto p = predicted_limit(model, 2, {idx - 1, idx2 - 1}))
          cov_pred = to_double(*p);
        add("cov_scaled:" + obs[o2].name, cov * cov_scale, 0.0, cov_pred);
      }
    }
  }
  return rows;
}

double regularized_gamma_q(double s, double x) {
  if (x < 0 || s <= 0) throw std::invalid_argument("bad gamma arguments");
  if (x == 0) return 1.0;
  auto gamma_p_series = [](double a, double z) {
    double sum = 1.0 / a, term = sum;
    for (int k = 1; k < 10000; ++k) {
      term *= z / (a + k);
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-z + a * std::log(z) - std::lgamma(a));
  };
  auto gamma_q_cf = [](double a, double z) {
    // Lentz continued fraction for the upper tail.
    const double tiny = 1e-300;
    double b = z + 1 - a, c = 1 / tiny, d = 1 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
      double an = -i * (i - a);
      b += 2;
      d = an * d + b;
      if (std::fabs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::fabs(c) < tiny) c = tiny;
      d = 1 / d;
      double delta = d * c;
      h *= delta;
      if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-z + a * std::log(z) - std::lgamma(a));
  };
  if (x < s + 1) return 1.0 - gamma_p_series(s, x);
  return gamma_q_cf(s, x);
}

double chi_square_tail(double statistic, int dof) {
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult sampler_chi_square(const RepresentationModel& model, int q,
                                   long long n, std::uint64_t seed,
                                   double significance, int threads) {
  CanonicalMeasure measure = canonical_measure(model, q);
  std::map<YoungDiagram, int> bin_of;
  std::vector<double> expected;
  for (size_t i = 0; i < measure.diagrams.size(); ++i) {
    if (measure.probability[i] == 0) continue;
    bin_of[measure.diagrams[i]] = static_cast<int>(expected.size());
    expected.push_back(to_double(measure.probability[i]) * double(n));
  }

  std::vector<std::vector<long long>> counts(
      std::max(1, threads), std::vector<long long>(expected.size(), 0));
  auto run = [&](int worker, long long begin, long long end) {
    for (long long s = begin; s < end; ++s) {
      RngStream rng(seed, static_cast<std::uint64_t>(s));
      YoungDiagram la = draw(model, q, rng);
      auto it = bin_of.find(la);
      if (it == bin_of.end())
        throw std::logic_error("sampled a diagram outside the measure support");
      ++counts[worker][it->second];
    }
  };
  if (threads <= 1) {
    run(0, 0, n);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (n + threads - 1) / threads;
    int worker = 0;
    for (long long begin = 0; begin < n; begin += chunk, ++worker)
      pool.emplace_back(run, worker, begin, std::min(begin + chunk, n));
    for (auto& t : pool) t.join();
  }

  ChiSquareResult out;
  out.n_samples = n;
  out.dof = static_cast<int>(expected.size()) - 1;
  for (size_t b = 0; b < expected.size(); ++b) {
    long long observed = 0;
    for (const auto& c : counts) observed += c[b];
    double diff = double(observed) - expected[b];
    out.statistic += diff * diff / expected[b];
  }
  out.p_value = chi_square_tail(out.statistic, out.dof);
  out.pass = out.p_value >= significance;
  return out;
}

}  // namespace charfluct
