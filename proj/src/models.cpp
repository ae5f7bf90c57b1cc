#include "charfluct/models.hpp"

#include <cmath>
#include <stdexcept>

#include "charfluct/characters.hpp"

namespace charfluct {

namespace {

std::optional<Rational> rational_sqrt(const Rational& p) {
  if (p < 0) return std::nullopt;
  Int num = p.get_num(), den = p.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) &&
      mpz_perfect_square_p(den.get_mpz_t())) {
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn) / Rational(rd);
  }
  return std::nullopt;
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int slots) -> void {
    if (slots == 1) {
      if (remaining >= 1) {
        current.push_back(remaining);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (int v = 1; v + (slots - 1) <= remaining; ++v) {
      current.push_back(v);
      self(self, remaining - v, slots - 1);
      current.pop_back();
    }
  };
  if (parts >= 1) rec(rec, total, parts);
  return out;
}

// The three covariance limits of a model at (l1, l2), after filling the
// missing ones through the limit identities
//   cov_free = cov_bullet + S,   cov_bullet = cov_cycles - l1 l2 c c.
struct ResolvedCov {
  std::optional<Rational> free, bullet, cycles;
};

ResolvedCov resolve_cov(const PredictedLimits& limits, int l1, int l2) {
  ResolvedCov r;
  if (limits.cov_free) r.free = limits.cov_free(l1, l2);
  if (limits.cov_bullet) r.bullet = limits.cov_bullet(l1, l2);
  if (limits.cov_cycles) r.cycles = limits.cov_cycles(l1, l2);
  auto s = composition_sum(limits, l1, l2);
  std::optional<Rational> cc;
  if (limits.c) {
    auto c1 = limits.c(l1 + 1), c2 = limits.c(l2 + 1);
    if (c1 && c2) cc = Rational(l1) * Rational(l2) * *c1 * *c2;
  }
  auto check_or_set = [](std::optional<Rational>& slot, const Rational& v) {
    if (slot && *slot != v)
      throw std::logic_error(
          "covariance limit expressions disagree: formula transcription bug");
    if (!slot) slot = v;
  };
  if (r.cycles && cc) check_or_set(r.bullet, *r.cycles - *cc);
  if (r.bullet && s) check_or_set(r.free, *r.bullet + *s);
  if (r.free && s) check_or_set(r.bullet, *r.free - *s);
  if (r.bullet && cc) check_or_set(r.cycles, *r.bullet + *cc);
  return r;
}

}  // namespace

std::optional<Rational> exact_half_power(const Rational& p, int halves) {
  if (halves < 0) return std::nullopt;
  if (halves % 2 == 0) return rational_pow(p, halves / 2);
  if (p == 0) return Rational(0);
  if (p == 1) return Rational(1);
  if (auto root = rational_sqrt(p)) return rational_pow(*root, halves);
  return std::nullopt;
}

std::optional<Rational> composition_sum(const PredictedLimits& limits, int l1,
                                        int l2) {
  if (!limits.c) return std::nullopt;
  Rational total = 0;
  for (int r = 1; r <= std::min(l1, l2); ++r) {
    Rational weight = Rational(l1) * Rational(l2) / Rational(r);
    for (const auto& a : compositions(l1, r)) {
      for (const auto& b : compositions(l2, r)) {
        Rational prod = weight;
        for (int i = 0; i < r; ++i) {
          auto c = limits.c(a[i] + b[i]);
          if (!c) return std::nullopt;
          prod *= *c;
        }
        total += prod;
      }
    }
  }
  return total;
}

std::optional<Rational> predicted_limit(const RepresentationModel& model,
                                        int n, const std::vector<int>& ls) {
  if (n == 1) {
    if (ls.size() != 1) throw std::invalid_argument("n = 1 takes one index");
    if (!model.limits.c) return std::nullopt;
    return model.limits.c(ls[0] + 1);
  }
  if (n == 2) {
    if (ls.size() != 2) throw std::invalid_argument("n = 2 takes two indices");
    return resolve_cov(model.limits, ls[0], ls[1]).free;
  }
  throw std::invalid_argument("predicted limits cover n in {1, 2}");
}

RepresentationModel plancherel_model() {
  RepresentationModel m;
  m.name = "plancherel";
  m.character = [](int q, const CycleType& rho) -> Rational {
    if (rho.weight() != q)
      throw std::invalid_argument("class size mismatch");
    return rho.multiplicity(1) == q ? Rational(1) : Rational(0);
  };
  m.sampler = RepresentationModel::Sampler::Plancherel;
  m.limits.c = [](int idx) {
    return std::optional<Rational>(idx == 2 ? 1 : 0);
  };
  m.limits.cov_cycles = [](int, int) { return std::optional<Rational>(0); };
  return m;
}

RepresentationModel tensor_model_with_dimension(std::function<int(int)> d_of_q,
                                                std::optional<Rational> p) {
  RepresentationModel m;
  m.name = "tensor";
  m.character = [d_of_q](int q, const CycleType& rho) -> Rational {
    if (rho.weight() != q)
      throw std::invalid_argument("class size mismatch");
    int d = d_of_q(q);
    if (d < 1) throw std::invalid_argument("tensor dimension must be >= 1");
    int moved = 0;
    for (int part : rho.parts()) moved += part - 1;
    Int dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(moved));
    return Rational(1) / Rational(dp);
  };
  m.sampler = RepresentationModel::Sampler::SchurWeyl;
  m.schur_weyl_dimension = d_of_q;
  if (p) {
    Rational pv = *p;
    m.limits.c = [pv](int idx) {
      return std::optional<Rational>(rational_pow(pv, idx - 2));
    };
    m.limits.cov_cycles = [](int, int) { return std::optional<Rational>(0); };
  }
  return m;
}

RepresentationModel tensor_model(const Rational& p) {
  if (p < 0) throw std::invalid_argument("tensor parameter must be >= 0");
  Rational pv = p;
  std::function<int(int)> d_of_q;
  if (p == 0) {
    d_of_q = [](int q) { return std::max(1, q * q); };
  } else {
    double pd = to_double(pv);
    d_of_q = [pd](int q) {
      return std::max<int>(1, std::llround(std::sqrt(double(q)) / pd));
    };
  }
  auto m = tensor_model_with_dimension(d_of_q, p);
  m.name = "tensor(p=" + fraction_string(p) + ")";
  return m;
}

RepresentationModel irreducible_model(std::function<YoungDiagram(int)> shape,
                                      std::string name) {
  RepresentationModel m;
  m.name = std::move(name);
  m.character = [shape](int q, const CycleType& rho) -> Rational {
    if (rho.weight() != q)
      throw std::invalid_argument("class size mismatch");
    YoungDiagram la = shape(q);
    if (la.box_count() != q)
      throw std::invalid_argument("shape generator returned wrong box count");
    return CharacterTable::cached(q).normalized_character(la, rho);
  };
  // Diagrams are non-random: every cumulant of order >= 2 of the shape
  // functionals vanishes identically.
  m.limits.cov_free = [](int, int) { return std::optional<Rational>(0); };
  return m;
}

YoungDiagram staircase_diagram(int q) {
  if (q == 0) return YoungDiagram();
  int k = 1;
  while ((k + 1) * (k + 2) / 2 <= q) ++k;
  std::vector<int> rows;
  for (int i = k; i >= 1; --i) rows.push_back(i);
  int rest = q - k * (k + 1) / 2;
  for (int i = 0; i < rest; ++i) ++rows[i];
  return YoungDiagram(std::move(rows));
}

YoungDiagram rectangular_diagram(int q) {
  if (q == 0) return YoungDiagram();
  int a = std::max(1, static_cast<int>(std::sqrt(double(q))));
  std::vector<int> rows(q / a, a);
  if (q % a) rows.push_back(q % a);
  return YoungDiagram(std::move(rows));
}

RepresentationModel restrict_model(const RepresentationModel& base,
                                   std::function<int(int)> r_of_q,
                                   const Rational& p) {
  RepresentationModel m;
  m.name = "restrict(" + base.name + ",p=" + fraction_string(p) + ")";
  auto base_char = base.character;
  m.character = [base_char, r_of_q](int q, const CycleType& rho) -> Rational {
    if (rho.weight() != q)
      throw std::invalid_argument("class size mismatch");
    int r = r_of_q(q);
    if (r < q)
      throw std::invalid_argument("restriction requires r_q >= q");
    return base_char(r, rho.padded(r));
  };
  const PredictedLimits base_limits = base.limits;
  Rational pv = p;
  if (base.limits.c) {
    m.limits.c = [base_limits, pv](int idx) -> std::optional<Rational> {
      auto c = base_limits.c(idx);
      auto f = exact_half_power(pv, idx - 2);
      if (!c || !f) return std::nullopt;
      return *f * *c;
    };
  }
  if (base.limits.cov_cycles) {
    m.limits.cov_cycles = [base_limits, pv](
                              int l1, int l2) -> std::optional<Rational> {
      auto base_cov = base_limits.cov_cycles(l1, l2);
      auto f = exact_half_power(pv, l1 + l2);
      if (!base_cov || !f) return std::nullopt;
      return *f * *base_cov;
    };
  }
  // Covariance of the restricted free cumulants; each addend keeps its own
  // power of p so that p = 0 degenerates to the Plancherel values.
  m.limits.cov_free = [base_limits, pv](int l1,
                                        int l2) -> std::optional<Rational> {
    ResolvedCov base_cov = resolve_cov(base_limits, l1, l2);
    if (!base_cov.free || !base_limits.c) return std::nullopt;
    auto c1 = base_limits.c(l1 + 1), c2 = base_limits.c(l2 + 1);
    if (!c1 || !c2) return std::nullopt;
    auto p_full = exact_half_power(pv, l1 + l2);
    auto p_less = exact_half_power(pv, l1 + l2 - 2);
    if (!p_full || !p_less) return std::nullopt;
    Rational out = *p_full * *base_cov.free;
    out -= Rational(l1) * Rational(l2) * *c1 * *c2 * (*p_less - *p_full);
    for (int r = 1; r <= std::min(l1, l2); ++r) {
      auto p_r = exact_half_power(pv, l1 + l2 - 2 * r);
      if (!p_r) return std::nullopt;
      Rational weight = Rational(l1) * Rational(l2) / Rational(r);
      for (const auto& a : compositions(l1, r)) {
        for (const auto& b : compositions(l2, r)) {
          Rational prod = weight;
          for (int i = 0; i < r; ++i) {
            auto c = base_limits.c(a[i] + b[i]);
            if (!c) return std::nullopt;
            prod *= *c;
          }
          out += prod * (*p_r - *p_full);
        }
      }
    }
    return out;
  };
  return m;
}

RepresentationModel restrict_model(const RepresentationModel& base,
                                   const Rational& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("restriction ratio must lie in [0, 1]");
  std::function<int(int)> r_of_q;
  if (p == 0) {
    r_of_q = [](int q) { return std::max(q, q * q); };
  } else {
    double pd = to_double(p);
    r_of_q = [pd](int q) {
      return std::max<int>(q, std::llround(double(q) / pd));
    };
  }
  return restrict_model(base, r_of_q, p);
}

RepresentationModel induce_model(const RepresentationModel& base,
                                 const Rational& p) {
  if (p <= 0 || p > 1)
    throw std::invalid_argument("induction ratio must lie in (0, 1]");
  double pd = to_double(p);
  auto r_of_q = [pd](int q) {
    return std::min(q, std::max(1, static_cast<int>(std::llround(pd * q))));
  };
  RepresentationModel m;
  m.name = "induce(" + base.name + ",p=" + fraction_string(p) + ")";
  auto base_char = base.character;
  m.character = [base_char, r_of_q](int q, const CycleType& rho) -> Rational {
    if (rho.weight() != q)
      throw std::invalid_argument("class size mismatch");
    int r = r_of_q(q);
    int removed = q - r;
    if (rho.multiplicity(1) < removed) return Rational(0);
    std::vector<int> parts;
    int dropped = 0;
    for (int part : rho.parts()) {
      if (part == 1 && dropped < removed) {
        ++dropped;
        continue;
      }
      parts.push_back(part);
    }
    Rational factor =
        Rational(falling_factorial(rho.multiplicity(1), removed)) /
        Rational(falling_factorial(q, removed));
    return factor * base_char(r, CycleType(std::move(parts)));
  };
  const PredictedLimits base_limits = base.limits;
  Rational pv = p;
  if (base.limits.c) {
    m.limits.c = [base_limits, pv](int idx) -> std::optional<Rational> {
      if (idx == 2) return Rational(1);
      auto c = base_limits.c(idx);
      auto f = exact_half_power(pv, idx);
      if (!c || !f) return std::nullopt;
      return *f * *c;
    };
  }
  // No closed-form covariance is published for induction; reports stay
  // empirical.
  return m;
}

RepresentationModel outer_model(const RepresentationModel& first,
                                const RepresentationModel& second,
                                const Rational& p1) {
  if (p1 < 0 || p1 > 1)
    throw std::invalid_argument("outer split ratio must lie in [0, 1]");
  double pd = to_double(p1);
  auto r1_of_q = [pd](int q) {
    return std::min(q, std::max(0, static_cast<int>(std::llround(pd * q))));
  };
  RepresentationModel m;
  m.name = "outer(" + first.name + "," + second.name + ")";
  auto chi1 = first.character;
  auto chi2 = second.character;
  m.character = [chi1, chi2, r1_of_q](int q, const CycleType& rho) -> Rational {
    if (rho.weight() != q)
      throw std::invalid_argument("class size mismatch");
    int r1 = r1_of_q(q);
    int r2 = q - r1;
    // Group equal parts: counts[v] copies of part v.
    std::vector<std::pair<int, int>> counts;
    for (int part : rho.parts()) {
      if (!counts.empty() && counts.back().first == part)
        ++counts.back().second;
      else
        counts.push_back({part, 1});
    }
    Rational total = 0;
    std::vector<int> take(counts.size(), 0);
    auto rec = [&](auto&& self, size_t i, int sum) -> void {
      if (sum > r1) return;
      if (i == counts.size()) {
        if (sum != r1) return;
        std::vector<int> parts1, parts2;
        Int split_ways = 1;
        for (size_t v = 0; v < counts.size(); ++v) {
          split_ways *= binomial(counts[v].second, take[v]);
          parts1.insert(parts1.end(), take[v], counts[v].first);
          parts2.insert(parts2.end(), counts[v].second - take[v],
                        counts[v].first);
        }
        total += Rational(split_ways) * chi1(r1, CycleType(parts1)) *
                 chi2(r2, CycleType(parts2));
        return;
      }
      for (int t = 0; t <= counts[i].second; ++t) {
        take[i] = t;
        self(self, i + 1, sum + t * counts[i].first);
      }
    };
    rec(rec, 0, 0);
    // Normalize by the index [S_q : S_{r1} x S_{r2}].
    return total * Rational(factorial(r1) * factorial(r2)) /
           Rational(factorial(q));
  };
  const PredictedLimits limits1 = first.limits;
  const PredictedLimits limits2 = second.limits;
  Rational p1v = p1;
  Rational p2v = Rational(1) - p1;
  if (first.limits.c && second.limits.c) {
    m.limits.c = [limits1, limits2, p1v, p2v](int idx)
        -> std::optional<Rational> {
      auto c1 = limits1.c(idx);
      auto c2 = limits2.c(idx);
      auto f1 = exact_half_power(p1v, idx);
      auto f2 = exact_half_power(p2v, idx);
      if (!c1 || !c2 || !f1 || !f2) return std::nullopt;
      return *f1 * *c1 + *f2 * *c2;
    };
  }
  m.limits.cov_bullet = [limits1, limits2, p1v, p2v](
                            int l1, int l2) -> std::optional<Rational> {
    ResolvedCov cov1 = resolve_cov(limits1, l1, l2);
    ResolvedCov cov2 = resolve_cov(limits2, l1, l2);
    auto f1 = exact_half_power(p1v, l1 + l2);
    auto f2 = exact_half_power(p2v, l1 + l2);
    if (!cov1.bullet || !cov2.bullet || !f1 || !f2) return std::nullopt;
    return *f1 * *cov1.bullet + *f2 * *cov2.bullet;
  };
  return m;
}

RepresentationModel tensor_product_model(const RepresentationModel& first,
                                         const RepresentationModel& second) {
  RepresentationModel m;
  m.name = "tensor-product(" + first.name + "," + second.name + ")";
  auto chi1 = first.character;
  auto chi2 = second.character;
  m.character = [chi1, chi2](int q, const CycleType& rho) -> Rational {
    return chi1(q, rho) * chi2(q, rho);
  };
  m.limits = plancherel_model().limits;
  return m;
}

}  // namespace charfluct
