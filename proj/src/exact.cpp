#include "charfluct/exact.hpp"

#include <cmath>
#include <numeric>

#include "charfluct/cumulants.hpp"
#include "charfluct/transition_measure.hpp"

namespace charfluct {

Rational CanonicalMeasure::probability_of(const YoungDiagram& la) const {
  for (size_t i = 0; i < diagrams.size(); ++i)
    if (diagrams[i] == la) return probability[i];
  throw std::invalid_argument("diagram not in measure support: " + la.str());
}

CanonicalMeasure canonical_measure(const RepresentationModel& model, int q) {
  const CharacterTable& table = CharacterTable::cached(q);
  const int count = static_cast<int>(table.diagrams().size());
  // Multiplicity of la up to the total dimension of the representation:
  // sum over classes of chi_model(rho) chi^la(rho) / z_rho.
  std::vector<Rational> weighted(count, 0);
  std::vector<Rational> model_char(count);
  for (int c = 0; c < count; ++c)
    model_char[c] = model.character(q, table.classes()[c]);
  Rational total = 0;
  for (int l = 0; l < count; ++l) {
    Rational mult = 0;
    for (int c = 0; c < count; ++c) {
      mult += model_char[c] * Rational(Int(static_cast<long>(table.character(l, c)))) /
              Rational(table.symmetry_order(c));
    }
    if (mult < 0)
      throw InvalidModelError("negative multiplicity for " +
                              table.diagrams()[l].str() +
                              ": inconsistent character oracle");
    weighted[l] = mult * Rational(table.dimension(l));
    total += weighted[l];
  }
  if (total <= 0)
    throw InvalidModelError("character oracle yields an empty representation");
  CanonicalMeasure out;
  out.q = q;
  out.diagrams = table.diagrams();
  out.probability.reserve(count);
  for (auto& w : weighted) out.probability.push_back(w / total);
  return out;
}

Rational central_eigenvalue(const CycleType& k, const YoungDiagram& la,
                            const CharacterTable& table) {
  const int q = la.box_count();
  const int r = k.weight();
  if (r > q) return 0;
  return Rational(falling_factorial(q, r)) *
         table.normalized_character(la, k.padded(q));
}

Rational exact_cumulant(const CanonicalMeasure& measure,
                        const std::vector<CycleType>& args,
                        CumulantSpecies species) {
  const CharacterTable& table = CharacterTable::cached(measure.q);
  const int n = static_cast<int>(args.size());
  // Per-diagram eigenvalues of each argument, restricted to the support.
  std::vector<int> support;
  for (size_t i = 0; i < measure.diagrams.size(); ++i)
    if (measure.probability[i] != 0) support.push_back(static_cast<int>(i));

  MomentFn<Rational> moment;
  if (species == CumulantSpecies::Natural) {
    std::vector<std::vector<Rational>> eig(n);
    for (int i = 0; i < n; ++i) {
      eig[i].reserve(support.size());
      for (int s : support)
        eig[i].push_back(
            central_eigenvalue(args[i], measure.diagrams[s], table));
    }
    moment = [&measure, support, eig](const std::vector<int>& subset) {
      Rational out = 0;
      for (size_t j = 0; j < support.size(); ++j) {
        Rational prod = measure.probability[support[j]];
        for (int i : subset) prod *= eig[i][j];
        out += prod;
      }
      return out;
    };
  } else {
    moment = [&measure, &table, &args, support](const std::vector<int>& subset) {
      CycleType concat;
      for (int i : subset) concat = concat.concat(args[i]);
      Rational out = 0;
      for (int s : support) {
        out += measure.probability[s] *
               central_eigenvalue(concat, measure.diagrams[s], table);
      }
      return out;
    };
  }
  return joint_cumulant<Rational>(
      n, moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });
}

Rational exact_cumulant(const RepresentationModel& model, int q,
                        const std::vector<CycleType>& args,
                        CumulantSpecies species) {
  return exact_cumulant(canonical_measure(model, q), args, species);
}

Rational exact_free_cumulant_cumulant(const CanonicalMeasure& measure,
                                      const std::vector<int>& indices) {
  const int n = static_cast<int>(indices.size());
  int max_index = *std::max_element(indices.begin(), indices.end());
  std::vector<int> support;
  for (size_t i = 0; i < measure.diagrams.size(); ++i)
    if (measure.probability[i] != 0) support.push_back(static_cast<int>(i));
  std::vector<std::vector<Rational>> values(support.size());
  for (size_t j = 0; j < support.size(); ++j)
    values[j] = diagram_free_cumulants(measure.diagrams[support[j]], max_index);
  MomentFn<Rational> moment = [&](const std::vector<int>& subset) {
    Rational out = 0;
    for (size_t j = 0; j < support.size(); ++j) {
      Rational prod = measure.probability[support[j]];
      for (int i : subset) prod *= values[j][indices[i] - 1];
      out += prod;
    }
    return out;
  };
  return joint_cumulant<Rational>(
      n, moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });
}

Rational exact_cycle_cumulant(const RepresentationModel& model, int q,
                              const std::vector<int>& lengths) {
  int total = std::accumulate(lengths.begin(), lengths.end(), 0);
  if (total > q)
    throw std::invalid_argument("cycles do not fit in the ground set");
  const int n = static_cast<int>(lengths.size());
  MomentFn<Rational> moment = [&](const std::vector<int>& subset) {
    std::vector<int> parts;
    for (int i : subset) parts.push_back(lengths[i]);
    return model.character(q, CycleType(std::move(parts)).padded(q));
  };
  return joint_cumulant<Rational>(
      n, moment, [](const Rational& a, const Rational& b) -> Rational { return a * b; });
}

namespace {

// value * q^{exponent/2}; exact when the exponent is even.
std::pair<double, std::optional<Rational>> scale_half_power(
    const Rational& value, int q, int exponent_halves) {
  std::optional<Rational> exact;
  if (exponent_halves % 2 == 0) {
    Rational factor = exponent_halves >= 0
                          ? rational_pow(Rational(q), exponent_halves / 2)
                          : Rational(1) / rational_pow(Rational(q),
                                                       -exponent_halves / 2);
    exact = value * factor;
    return {to_double(*exact), exact};
  }
  double scaled =
      to_double(value) * std::pow(double(q), exponent_halves / 2.0);
  return {scaled, exact};
}

}  // namespace

std::vector<DiagnosticsRow> factorization_diagnostics(
    const RepresentationModel& model, const std::vector<int>& qs, int max_n,
    const std::vector<int>& single_ls,
    const std::vector<std::pair<int, int>>& pair_ls) {
  std::vector<DiagnosticsRow> rows;
  auto push = [&rows](int q, int condition, std::string indices,
                      const Rational& value, int exponent_halves,
                      std::optional<Rational> predicted) {
    DiagnosticsRow row;
    row.q = q;
    row.condition = condition;
    row.indices = std::move(indices);
    auto [scaled, exact] = scale_half_power(value, q, exponent_halves);
    row.value = scaled;
    row.exact = exact;
    if (predicted) row.predicted = to_double(*predicted);
    rows.push_back(std::move(row));
  };

  for (int q : qs) {
    CanonicalMeasure measure = canonical_measure(model, q);
    for (int l : single_ls) {
      if (l > q) continue;
      auto predicted = predicted_limit(model, 1, {l});
      // Condition 1, n = 1: E(sigma) q^{(l-1)/2}.
      Rational mean_cycle = exact_cycle_cumulant(model, q, {l});
      push(q, 1, std::to_string(l), mean_cycle, l - 1, predicted);
      // Conditions 2 and 3 coincide at n = 1: E(Sigma_l) q^{-(l+1)/2}.
      Rational mean_class =
          exact_cumulant(measure, {CycleType({l})}, CumulantSpecies::Natural);
      push(q, 2, std::to_string(l), mean_class, -(l + 1), predicted);
      push(q, 3, std::to_string(l), mean_class, -(l + 1), predicted);
      // Condition 4, n = 1: E(R_{l+1}) q^{-(l+1)/2}.
      Rational mean_free = exact_free_cumulant_cumulant(measure, {l + 1});
      push(q, 4, std::to_string(l), mean_free, -(l + 1), predicted);
    }
    if (max_n < 2) continue;
    for (auto [l1, l2] : pair_ls) {
      std::string indices = std::to_string(l1) + "," + std::to_string(l2);
      std::optional<Rational> cov_free, cov_bullet, cov_cycles;
      if (model.limits.cov_cycles) cov_cycles = model.limits.cov_cycles(l1, l2);
      cov_free = predicted_limit(model, 2, {l1, l2});
      if (cov_free) {
        auto s = composition_sum(model.limits, l1, l2);
        if (s) cov_bullet = *cov_free - *s;
      }
      if (l1 + l2 <= q) {
        Rational k_cycles = exact_cycle_cumulant(model, q, {l1, l2});
        push(q, 1, indices, k_cycles, l1 + l2, cov_cycles);
      }
      std::vector<CycleType> args = {CycleType({l1}), CycleType({l2})};
      Rational k_bullet =
          exact_cumulant(measure, args, CumulantSpecies::Disjoint);
      push(q, 2, indices, k_bullet, -(l1 + l2), cov_bullet);
      Rational k_natural =
          exact_cumulant(measure, args, CumulantSpecies::Natural);
      push(q, 3, indices, k_natural, -(l1 + l2), cov_free);
      Rational k_free =
          exact_free_cumulant_cumulant(measure, {l1 + 1, l2 + 1});
      push(q, 4, indices, k_free, -(l1 + l2), cov_free);
    }
  }
  return rows;
}

}  // namespace charfluct
