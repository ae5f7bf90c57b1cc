#include "charfluct/transition_measure.hpp"

#include <stdexcept>

namespace charfluct {

TransitionMeasure::TransitionMeasure(std::vector<Rational> atoms,
                                     std::vector<Rational> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.size() != weights_.size() || atoms_.empty())
    throw std::invalid_argument("atoms/weights mismatch");
  Rational total = 0;
  for (size_t i = 0; i < atoms_.size(); ++i) {
    if (i > 0 && atoms_[i] <= atoms_[i - 1])
      throw std::invalid_argument("atoms must be strictly increasing");
    if (weights_[i] <= 0)
      throw std::invalid_argument("weights must be positive");
    total += weights_[i];
  }
  if (total != 1) throw std::invalid_argument("weights must sum to one");
}

Rational TransitionMeasure::moment(int n) const {
  Rational out = 0;
  for (size_t i = 0; i < atoms_.size(); ++i)
    out += weights_[i] * rational_pow(atoms_[i], n);
  return out;
}

std::vector<Rational> TransitionMeasure::moments(int n_max) const {
  std::vector<Rational> out;
  std::vector<Rational> powers(atoms_.size(), 1);
  for (int n = 1; n <= n_max; ++n) {
    Rational m = 0;
    for (size_t i = 0; i < atoms_.size(); ++i) {
      powers[i] *= atoms_[i];
      m += weights_[i] * powers[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

TransitionMeasure transition_measure(const YoungDiagram& d) {
  Profile p = profile(d);
  std::vector<Rational> atoms, weights;
  for (int x : p.minima) {
    Rational num = 1, den = 1;
    for (int y : p.maxima) num *= (x - y);
    for (int x2 : p.minima)
      if (x2 != x) den *= (x - x2);
    atoms.emplace_back(x);
    weights.push_back(num / den);
  }
  return TransitionMeasure(std::move(atoms), std::move(weights));
}

TransitionMeasure dilate(const TransitionMeasure& mu, const Rational& p) {
  if (p <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<Rational> atoms = mu.atoms();
  for (auto& a : atoms) a *= p;
  return TransitionMeasure(std::move(atoms), mu.weights());
}

namespace {

// C_k(m) = sum over i_1+..+i_k = m, i_j >= 0 of M_{i_1} .. M_{i_k}, with
// M_0 = 1: the m-th coefficient of the k-th power of the moment series.
std::vector<std::vector<Rational>> moment_power_table(
    const std::vector<Rational>& m_with_unit, int n_max) {
  std::vector<std::vector<Rational>> powers;
  std::vector<Rational> current(n_max + 1, 0);
  current[0] = 1;
  powers.push_back(current);
  for (int k = 1; k <= n_max; ++k) {
    std::vector<Rational> next(n_max + 1, 0);
    for (int i = 0; i <= n_max; ++i) {
      if (current[i] == 0) continue;
      for (int j = 0; i + j <= n_max; ++j)
        next[i + j] += current[i] * m_with_unit[j];
    }
    current = std::move(next);
    powers.push_back(current);
  }
  return powers;
}

}  // namespace

std::vector<Rational> free_cumulants_from_moments(
    const std::vector<Rational>& moments) {
  const int n_max = static_cast<int>(moments.size());
  std::vector<Rational> m_with_unit(n_max + 1, 0);
  m_with_unit[0] = 1;
  for (int i = 1; i <= n_max; ++i) m_with_unit[i] = moments[i - 1];
  auto powers = moment_power_table(m_with_unit, n_max);
  std::vector<Rational> r(n_max);
  for (int n = 1; n <= n_max; ++n) {
    Rational value = moments[n - 1];
    for (int k = 1; k < n; ++k) value -= r[k - 1] * powers[k][n - k];
    r[n - 1] = std::move(value);  // the k = n term is R_n * C_n(0) = R_n
  }
  return r;
}

std::vector<Rational> moments_from_free_cumulants(
    const std::vector<Rational>& cumulants) {
  const int n_max = static_cast<int>(cumulants.size());
  std::vector<Rational> m_with_unit(n_max + 1, 0);
  m_with_unit[0] = 1;
  std::vector<Rational> m(n_max);
  for (int n = 1; n <= n_max; ++n) {
    // Power table over the moments known so far; entries beyond n-1 unused.
    auto powers = moment_power_table(m_with_unit, n_max);
    Rational value = 0;
    for (int k = 1; k <= n; ++k) value += cumulants[k - 1] * powers[k][n - k];
    m[n - 1] = value;
    m_with_unit[n] = std::move(value);
  }
  return m;
}

std::vector<Rational> diagram_moments(const YoungDiagram& d, int n_max) {
  Profile p = profile(d);
  // Series of the Cauchy transform in u = 1/z divided by u:
  // prod (1 - y u) / prod (1 - x u); the n-th coefficient is M_n.
  std::vector<Rational> series(n_max + 1, 0);
  series[0] = 1;
  for (int y : p.maxima) {
    for (int i = n_max; i >= 1; --i) series[i] -= Rational(y) * series[i - 1];
  }
  // Divide by (1 - x u): series[i] += x * series[i-1].
  for (int x : p.minima) {
    for (int i = 1; i <= n_max; ++i) series[i] += Rational(x) * series[i - 1];
  }
  return std::vector<Rational>(series.begin() + 1, series.end());
}

std::vector<Rational> diagram_free_cumulants(const YoungDiagram& d,
                                             int n_max) {
  return free_cumulants_from_moments(diagram_moments(d, n_max));
}

}  // namespace charfluct
