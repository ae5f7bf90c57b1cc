#include "charfluct/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "charfluct/conjugacy.hpp"
#include "charfluct/cumulants.hpp"
#include "charfluct/exact.hpp"
#include "charfluct/models.hpp"

namespace charfluct {

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json j;
  nlohmann::json check_list = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["cases"] = c.cases;
    if (!c.details.empty()) item["details"] = c.details;
    check_list.push_back(item);
    if (!c.pass) failures.push_back(c.name);
  }
  j["checks"] = std::move(check_list);
  j["failures"] = std::move(failures);
  j["notes"] = notes;
  j["pass"] = all_pass();
  return j;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases
        << " cases)";
    if (!c.details.empty()) out << " -- " << c.details;
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<CycleType> cycle_types_up_to(int max_weight) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (!parts.empty()) out.emplace_back(parts);
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, max_weight, max_weight);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Accumulates a named check; records the first failure, keeps counting.
struct Check {
  CheckResult r;
  bool ok = true;
  explicit Check(std::string name) { r.name = std::move(name); }
  void expect(bool pass, const std::string& what) {
    ++r.cases;
    if (!pass && ok) {
      ok = false;
      r.details = what;
    }
  }
  void note(const std::string& text) {
    if (r.details.empty()) r.details = text;
  }
  CheckResult finish() {
    r.pass = ok;
    return r;
  }
};
}  // namespace

VerifyReport verify_algebra(const AlgebraVerifyOptions& options) {
  VerifyReport report;
  const bool fault_winding = options.fault == FaultInjection::WindingSign;
  auto cycle_type_of = [fault_winding](const SetPartition& pi) {
    return detail::explicit_cycle_type_directed(pi, !fault_winding);
  };

  {
    Check check("sigma-multiplicity-rule");
    for (const auto& t : cycle_types_up_to(options.max_total)) {
      for (int q = t.weight(); q <= options.max_q; ++q) {
        AlgebraElement element = sigma(t, q);
        Int mult = sigma_multiplicity(t);
        bool coeffs_ok = true;
        for (const auto& [p, c] : element.terms())
          if (c != Rational(mult)) coeffs_ok = false;
        Rational expected_terms =
            Rational(falling_factorial(q, t.weight())) / Rational(mult);
        check.expect(coeffs_ok &&
                         Rational(element.term_count()) == expected_terms,
                     "multiplicity rule fails for " + t.str() + " at q=" +
                         std::to_string(q));
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    Check check("sigma-product-vs-expansion");
    Check disjoint_check("sigma-disjoint-product");
    auto types = cycle_types_up_to(options.max_total);
    for (const auto& t1 : types) {
      for (const auto& t2 : types) {
        if (t2 < t1) continue;
        if (t1.weight() + t2.weight() > options.max_total) continue;
        std::vector<SetPartition> gadgets = {sigma_gadget(t1),
                                             sigma_gadget(t2)};
        auto expansion = product_expansion(gadgets, ExpansionMode::Full);
        auto disjoint =
            product_expansion(gadgets, ExpansionMode::Disjoint).front();
        for (int q = 1; q <= options.max_q; ++q) {
          AlgebraElement product = sigma(t1, q) * sigma(t2, q);
          AlgebraElement expanded;
          for (const auto& s : expansion) expanded += sigma_of_partition(s, q);
          check.expect(product == expanded,
                       "group product mismatch for " + t1.str() + " x " +
                           t2.str() + " at q=" + std::to_string(q));
          AlgebraElement bullet =
              disjoint_product(sigma(t1, q), sigma(t2, q));
          bool ok = bullet == sigma_of_partition(disjoint, q) &&
                    bullet == sigma(t1.concat(t2), q);
          disjoint_check.expect(ok, "disjoint product mismatch for " +
                                        t1.str() + " x " + t2.str() +
                                        " at q=" + std::to_string(q));
        }
      }
    }
    report.checks.push_back(check.finish());
    report.checks.push_back(disjoint_check.finish());
  }

  {
    Check check("worked-example-decomposition");
    for (int q = 1; q <= options.max_q; ++q) {
      AlgebraElement product = sigma(CycleType({1}), q) * sigma(CycleType({1, 1}), q);
      AlgebraElement expected =
          sigma(CycleType({1, 1, 1}), q) + Rational(2) * sigma(CycleType({1, 1}), q);
      check.expect(product == expected,
                   "Sigma_1 Sigma_{1,1} mismatch at q=" + std::to_string(q));
      if (q >= 3) {
        auto decomposition = decompose_in_sigma_basis(product, q);
        std::map<CycleType, Rational> wanted = {{CycleType({1, 1, 1}), 1},
                                                {CycleType({1, 1}), 2}};
        check.expect(decomposition == wanted,
                     "decomposition mismatch at q=" + std::to_string(q));
      }
    }
    report.notes.push_back(
        "Sigma_1 * Sigma_{1,1} decomposes as Sigma_{1,1,1} + 2 Sigma_{1,1}");
    report.checks.push_back(check.finish());
  }

  {
    Check check(fault_winding ? "sigma-pi-coherence/explicit_cycle_type"
                              : "sigma-pi-coherence");
    long long degenerate_count = 0;
    for (int n = 1; n <= options.partitions_n; ++n) {
      for (const auto& pi : enumerate_partitions(n)) {
        if (has_degenerate_winding(pi)) {
          ++degenerate_count;
          bool threw = false;
          try {
            (void)explicit_cycle_type(pi);
          } catch (const DegenerateWindingError&) {
            threw = true;
          }
          check.expect(threw, "expected degenerate winding at " + pi.str());
          for (int q = n; q <= std::min(n + 1, options.max_q + 2); ++q) {
            check.expect(sigma_of_partition(pi, q).is_zero(),
                         "degenerate partition with nonzero class: " +
                             pi.str());
          }
          if (n <= 5)
            report.notes.push_back("degenerate winding: " + pi.str());
          continue;
        }
        CycleType k;
        try {
          k = cycle_type_of(pi);
        } catch (const DegenerateWindingError&) {
          check.expect(false, "unexpected degenerate winding at " + pi.str() +
                                  " (explicit_cycle_type)");
          continue;
        }
        for (int q = n; q <= n + 2; ++q) {
          check.expect(sigma_of_partition(pi, q) == sigma(k, q),
                       "sigma_pi(" + pi.str() + ") != sigma(" + k.str() +
                           ") at q=" + std::to_string(q) +
                           " (explicit_cycle_type)");
        }
      }
    }
    report.notes.push_back("degenerate-winding partitions up to n=" +
                           std::to_string(options.partitions_n) + ": " +
                           std::to_string(degenerate_count));
    report.checks.push_back(check.finish());
  }

  {
    Check check("degree-equals-n-minus-2genus");
    for (int n = 1; n <= options.degree_n; ++n) {
      for (const auto& pi : enumerate_partitions(n)) {
        if (has_degenerate_winding(pi)) continue;
        CycleType k = cycle_type_of(pi);
        check.expect(k.degree() == n - 2 * partition_genus(pi),
                     "degree/genus mismatch at " + pi.str() +
                         " (explicit_cycle_type)");
      }
    }
    report.checks.push_back(check.finish());
  }

  {
    Check check("genus-inequality-conditional");
    // All factor lists with at least two factors and total ground size <= 8.
    std::vector<std::vector<int>> compositions;
    std::vector<int> sizes;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        if (sizes.size() >= 2) compositions.push_back(sizes);
        return;
      }
      for (int s = 1; s <= remaining; ++s) {
        sizes.push_back(s);
        self(self, remaining - s);
        sizes.pop_back();
      }
    };
    for (int total = 2; total <= 8; ++total) rec(rec, total);
    for (const auto& composition : compositions) {
      std::vector<std::vector<SetPartition>> choices;
      for (int size : composition) choices.push_back(enumerate_partitions(size));
      std::vector<SetPartition> factors;
      auto iterate = [&](auto&& self, size_t i) -> void {
        if (i == composition.size()) {
          int base_genus = 0;
          for (const auto& f : factors) base_genus += partition_genus(f);
          int n = static_cast<int>(factors.size());
          for (const auto& s :
               product_expansion(factors, ExpansionMode::ConditionalCumulant)) {
            check.expect(partition_genus(s) >= base_genus + (n - 1),
                         "genus inequality fails");
          }
          return;
        }
        for (const auto& f : choices[i]) {
          factors.push_back(f);
          self(self, i + 1);
          factors.pop_back();
        }
      };
      iterate(iterate, 0);
    }
    report.checks.push_back(check.finish());
  }

  {
    Check check("falling-factorial-expectation");
    auto plancherel_chi = [](const CycleType& rho) -> Rational {
      return rho.multiplicity(1) == rho.weight() ? Rational(1) : Rational(0);
    };
    auto tensor_chi = [](const CycleType& rho) -> Rational {
      int moved = rho.weight() - rho.size();
      Int dp;
      mpz_ui_pow_ui(dp.get_mpz_t(), 2, static_cast<unsigned long>(moved));
      return Rational(1) / Rational(dp);
    };
    for (int q = 1; q <= options.max_q; ++q) {
      for (int k = 1; k <= q; ++k) {
        AlgebraElement element = sigma(CycleType(std::vector<int>(k, 1)), q);
        Rational expected(falling_factorial(q, k));
        check.expect(element.expectation(q, plancherel_chi) == expected &&
                         element.expectation(q, tensor_chi) == expected,
                     "falling-factorial expectation fails at q=" +
                         std::to_string(q) + " k=" + std::to_string(k));
      }
    }
    report.checks.push_back(check.finish());
  }

  return report;
}

VerifyReport verify_cumulants(const CumulantVerifyOptions& options) {
  VerifyReport report;
  std::vector<RepresentationModel> models = {plancherel_model(),
                                             tensor_model(Rational(1, 2))};

  // All multisets of cycle lengths {1..max_l} with 1..max_n entries.
  std::vector<std::vector<int>> tuples;
  std::vector<int> current;
  auto build = [&](auto&& self, int min_l) -> void {
    if (!current.empty()) tuples.push_back(current);
    if (static_cast<int>(current.size()) == options.max_n) return;
    for (int l = min_l; l <= options.max_l; ++l) {
      current.push_back(l);
      self(self, l);
      current.pop_back();
    }
  };
  build(build, 1);

  // Conditional-cumulant tables are model independent; cache per (tuple, q).
  std::map<std::pair<std::vector<int>, int>, CumulantTable<AlgebraElement>>
      kid_cache;
  auto kid_table_for = [&](const std::vector<int>& ls, int q)
      -> const CumulantTable<AlgebraElement>& {
    auto key = std::make_pair(ls, q);
    auto it = kid_cache.find(key);
    if (it != kid_cache.end()) return it->second;
    std::vector<AlgebraElement> xs;
    for (int l : ls) xs.push_back(sigma(CycleType({l}), q));
    return kid_cache.emplace(key, conditional_cumulant_table(xs))
        .first->second;
  };
  auto tuple_str = [](const std::vector<int>& ls) {
    std::string out;
    for (size_t i = 0; i < ls.size(); ++i)
      out += (i ? "," : "") + std::to_string(ls[i]);
    return out;
  };

  {
    Check routes("conditional-cumulant-two-routes");
    Check degree("conditional-cumulant-degree-bound");
    for (const auto& ls : tuples) {
      int weight = std::accumulate(ls.begin(), ls.end(), 0);
      std::vector<int> q_values = {std::max(2, weight - 1), weight,
                                   options.max_q};
      std::sort(q_values.begin(), q_values.end());
      q_values.erase(std::unique(q_values.begin(), q_values.end()),
                     q_values.end());
      for (int q : q_values) {
        if (q < 1 || q > options.max_q) continue;
        std::vector<CycleType> factors;
        for (int l : ls) factors.push_back(CycleType({l}));
        AlgebraElement combinatorial = conditional_cumulant(factors, q);
        std::vector<int> all(ls.size());
        std::iota(all.begin(), all.end(), 0);
        const AlgebraElement& inverted = kid_table_for(ls, q).at(all);
        routes.expect(combinatorial == inverted,
                      "conditional-cumulant routes differ for (" +
                          tuple_str(ls) + ") at q=" + std::to_string(q));
        if (!combinatorial.is_zero()) {
          int bound = 0;
          for (int l : ls) bound += l + 1;
          bound -= 2 * (static_cast<int>(ls.size()) - 1);
          degree.expect(combinatorial.degree() <= bound,
                        "degree bound fails for (" + tuple_str(ls) +
                            ") at q=" + std::to_string(q));
        }
      }
    }
    report.checks.push_back(routes.finish());
    report.checks.push_back(degree.finish());
  }

  {
    Check check("conditional-cumulant-worked-example");
    for (int q = 2; q <= options.max_q; ++q) {
      AlgebraElement kid = conditional_cumulant(
          {CycleType({1}), CycleType({1, 1})}, q);
      check.expect(kid == Rational(2) * sigma(CycleType({1, 1}), q),
                   "k_id(Sigma_1, Sigma_{1,1}) != 2 Sigma_{1,1} at q=" +
                       std::to_string(q));
    }
    report.checks.push_back(check.finish());
  }

  {
    Check check("top-degree-second-conditional-cumulant");
    for (int l1 = 1; l1 <= options.pair_weight - 1; ++l1) {
      for (int l2 = l1; l1 + l2 <= options.pair_weight; ++l2) {
        int q = l1 + l2;
        AlgebraElement kid =
            conditional_cumulant({CycleType({l1}), CycleType({l2})}, q);
        auto decomposition = decompose_in_sigma_basis(kid, q);
        std::map<CycleType, Rational> top;
        for (const auto& [t, c] : decomposition)
          if (t.degree() == l1 + l2) top[t] = c;
        // Compositions of l1 and l2 into r parts contribute l1 l2 / r to the
        // class indexed by the pairwise sums minus one.
        std::map<CycleType, Rational> expected;
        std::vector<int> a, b;
        auto comp = [&](auto&& self, int remaining, int parts,
                        std::vector<int>& into, auto&& next) -> void {
          if (remaining == 0 && parts == 0) {
            next();
            return;
          }
          if (parts <= 0) return;
          for (int v = 1; v <= remaining - (parts - 1); ++v) {
            into.push_back(v);
            self(self, remaining - v, parts - 1, into, next);
            into.pop_back();
          }
        };
        for (int r = 1; r <= std::min(l1, l2); ++r) {
          comp(comp, l1, r, a, [&]() {
            comp(comp, l2, r, b, [&]() {
              std::vector<int> parts;
              for (int i = 0; i < r; ++i) parts.push_back(a[i] + b[i] - 1);
              expected[CycleType(parts)] +=
                  Rational(l1) * Rational(l2) / Rational(r);
            });
          });
        }
        check.expect(top == expected,
                     "top-degree mismatch for l1=" + std::to_string(l1) +
                         " l2=" + std::to_string(l2));
      }
    }
    report.checks.push_back(check.finish());
  }

  for (const auto& model : models) {
    {
      Check check("brillinger[" + model.name + "]");
      for (int q = 4; q <= options.max_q; ++q) {
        CanonicalMeasure measure = canonical_measure(model, q);
        CharacterFn chi_q = [&model, q](const CycleType& rho) {
          return model.character(q, rho);
        };
        for (const auto& ls : tuples) {
          std::vector<CycleType> args;
          for (int l : ls) args.push_back(CycleType({l}));
          Rational exact =
              exact_cumulant(measure, args, CumulantSpecies::Natural);
          Rational composed = brillinger_compose(
              static_cast<int>(ls.size()), kid_table_for(ls, q), q, chi_q);
          check.expect(exact == composed,
                       "Brillinger mismatch for (" + tuple_str(ls) +
                           ") at q=" + std::to_string(q));
        }
      }
      report.checks.push_back(check.finish());
    }

    {
      Check check("connected-pairs-disjoint-cumulant[" + model.name + "]");
      for (int q = 4; q <= options.max_q; ++q) {
        CanonicalMeasure measure = canonical_measure(model, q);
        CharacterFn chi_q = [&model, q](const CycleType& rho) {
          return model.character(q, rho);
        };
        for (const auto& ls : tuples) {
          int weight = std::accumulate(ls.begin(), ls.end(), 0);
          if (weight > q) continue;
          std::vector<CycleType> args;
          for (int l : ls) args.push_back(CycleType({l}));
          Rational exact =
              exact_cumulant(measure, args, CumulantSpecies::Disjoint);
          Rational paired = disjoint_cumulant_connected_pairs(ls, q, chi_q);
          check.expect(exact == paired,
                       "connected-pairs mismatch for (" + tuple_str(ls) +
                           ") at q=" + std::to_string(q));
        }
      }
      report.checks.push_back(check.finish());
    }

    {
      Check check("natural-minus-disjoint-decomposition[" + model.name + "]");
      for (int q = 4; q <= options.max_q; ++q) {
        CanonicalMeasure measure = canonical_measure(model, q);
        CharacterFn chi_q = [&model, q](const CycleType& rho) {
          return model.character(q, rho);
        };
        for (int l1 = 1; l1 + 1 <= 6; ++l1) {
          for (int l2 = l1; l1 + l2 <= 6; ++l2) {
            std::vector<CycleType> args = {CycleType({l1}), CycleType({l2})};
            Rational natural =
                exact_cumulant(measure, args, CumulantSpecies::Natural);
            Rational bullet =
                exact_cumulant(measure, args, CumulantSpecies::Disjoint);
            AlgebraElement s1 = sigma(CycleType({l1}), q);
            AlgebraElement s2 = sigma(CycleType({l2}), q);
            Rational rhs =
                (s1 * s2 - disjoint_product(s1, s2)).expectation(q, chi_q);
            check.expect(natural - bullet == rhs,
                         "decomposition fails for l1=" + std::to_string(l1) +
                             " l2=" + std::to_string(l2) +
                             " q=" + std::to_string(q));
          }
        }
      }
      report.checks.push_back(check.finish());
    }

    {
      Check check("falling-factorial-cumulants[" + model.name + "]");
      for (int q = 4; q <= options.max_q; ++q) {
        CanonicalMeasure measure = canonical_measure(model, q);
        for (const auto& ls : tuples) {
          std::vector<CycleType> args;
          for (int l : ls) args.push_back(CycleType(std::vector<int>(l, 1)));
          Rational value =
              exact_cumulant(measure, args, CumulantSpecies::Natural);
          Rational expected = ls.size() == 1
                                  ? Rational(falling_factorial(q, ls[0]))
                                  : Rational(0);
          check.expect(value == expected,
                       "falling-factorial cumulant fails for (" +
                           tuple_str(ls) + ") at q=" + std::to_string(q));
        }
      }
      report.checks.push_back(check.finish());
    }
  }

  return report;
}

}  // namespace charfluct
