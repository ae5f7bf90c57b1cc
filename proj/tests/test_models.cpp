#include <doctest.h>

#include "charfluct/exact.hpp"
#include "charfluct/models.hpp"
#include "charfluct/transition_measure.hpp"

using namespace charfluct;

TEST_CASE("all oracles are normalized at the identity") {
  std::vector<RepresentationModel> models = {
      plancherel_model(),
      tensor_model(Rational(1, 2)),
      irreducible_model(staircase_diagram, "staircase"),
      restrict_model(plancherel_model(), Rational(1, 2)),
      induce_model(plancherel_model(), Rational(1, 2)),
      outer_model(plancherel_model(), tensor_model(Rational(1, 2)),
                  Rational(1, 2)),
      tensor_product_model(plancherel_model(), tensor_model(Rational(1, 2))),
  };
  for (const auto& model : models) {
    for (int q = 2; q <= 6; ++q) {
      CHECK(model.character(q, CycleType({1}).padded(q)) == 1);
    }
  }
}

TEST_CASE("base model oracles") {
  auto plancherel = plancherel_model();
  CHECK(plancherel.character(4, CycleType({1, 1, 1, 1})) == 1);
  CHECK(plancherel.character(4, CycleType({2, 1, 1})) == 0);

  auto tensor = tensor_model_with_dimension([](int) { return 2; },
                                            std::nullopt);
  CHECK(tensor.character(4, CycleType({2, 1, 1})) == Rational(1, 2));
  CHECK(tensor.character(4, CycleType({2, 2})) == Rational(1, 4));
  CHECK(tensor.character(4, CycleType({4})) == Rational(1, 8));
  // Multiplicative over disjoint cycles by construction.
  CHECK(tensor.character(5, CycleType({2, 2, 1})) ==
        tensor.character(5, CycleType({2, 1, 1, 1})) *
            tensor.character(5, CycleType({2, 1, 1, 1})));

  // tensor(p) resolves the dimension sequence as round(sqrt(q)/p).
  auto tensor_p = tensor_model(Rational(1, 2));
  CHECK(tensor_p.schur_weyl_dimension(900) == 60);
  CHECK(tensor_p.schur_weyl_dimension(100) == 20);

  CHECK_THROWS(tensor_model_with_dimension([](int) { return 0; }, std::nullopt)
                   .character(3, CycleType({1, 1, 1})));
}

TEST_CASE("irreducible presets") {
  for (int q = 1; q <= 30; ++q) {
    CHECK(staircase_diagram(q).box_count() == q);
    CHECK(rectangular_diagram(q).box_count() == q);
  }
  CHECK(staircase_diagram(6) == YoungDiagram({3, 2, 1}));
  CHECK(staircase_diagram(8) == YoungDiagram({4, 3, 1}));
  CHECK(rectangular_diagram(9) == YoungDiagram({3, 3, 3}));

  auto model = irreducible_model(staircase_diagram, "staircase");
  const auto& table = CharacterTable::cached(6);
  CHECK(model.character(6, CycleType({2, 1, 1, 1, 1})) ==
        table.normalized_character(YoungDiagram({3, 2, 1}),
                                   CycleType({2, 1, 1, 1, 1})));
}

TEST_CASE("restriction with r = q is the identity combinator") {
  auto base = tensor_model(Rational(1, 2));
  auto same = restrict_model(base, [](int q) { return q; }, Rational(1));
  for (int q = 2; q <= 6; ++q) {
    const auto& table = CharacterTable::cached(q);
    for (const auto& rho : table.classes())
      CHECK(same.character(q, rho) == base.character(q, rho));
  }
}

TEST_CASE("restriction at p = 0 gives the Plancherel constants") {
  auto restricted = restrict_model(tensor_model(Rational(1, 2)), Rational(0));
  CHECK(*predicted_limit(restricted, 1, {1}) == 1);
  CHECK(*predicted_limit(restricted, 1, {2}) == 0);
  CHECK(*predicted_limit(restricted, 1, {3}) == 0);
  CHECK(*predicted_limit(restricted, 2, {2, 2}) == 2);
  CHECK(*predicted_limit(restricted, 2, {1, 1}) == 0);
  CHECK(*predicted_limit(restricted, 2, {2, 3}) == 0);
}

TEST_CASE("predicted limits") {
  auto plancherel = plancherel_model();
  CHECK(*predicted_limit(plancherel, 1, {1}) == 1);
  CHECK(*predicted_limit(plancherel, 1, {4}) == 0);
  CHECK(*predicted_limit(plancherel, 2, {2, 2}) == 2);
  CHECK(*predicted_limit(plancherel, 2, {3, 3}) == 3);
  CHECK(*predicted_limit(plancherel, 2, {1, 1}) == 0);
  CHECK(*predicted_limit(plancherel, 2, {2, 3}) == 0);

  // Tensor covariances against the binomial display.
  for (const Rational& p : {Rational(1), Rational(1, 2), Rational(2, 3)}) {
    auto model = tensor_model(p);
    for (int l1 = 1; l1 <= 3; ++l1) {
      for (int l2 = l1; l2 <= 3; ++l2) {
        Rational expected = 0;
        for (int r = 2; r <= std::min(l1, l2); ++r) {
          expected += Rational(binomial(l1, r)) * Rational(binomial(l2, r)) *
                      Rational(r) * rational_pow(p, l1 + l2 - 2 * r);
        }
        CHECK(*predicted_limit(model, 2, {l1, l2}) == expected);
      }
    }
  }
  CHECK(*predicted_limit(tensor_model(Rational(1)), 2, {2, 3}) == 6);
  // Means: E(R_{l+1}) q^{-(l+1)/2} -> p^{l-1}.
  CHECK(*predicted_limit(tensor_model(Rational(1, 2)), 1, {2}) ==
        Rational(1, 2));

  // Inconsistent native limits must be detected.
  RepresentationModel broken = plancherel_model();
  broken.limits.cov_free = [](int, int) { return std::optional<Rational>(5); };
  CHECK_THROWS_AS(predicted_limit(broken, 2, {2, 2}), std::logic_error);
}

TEST_CASE("restriction covariance formula matches the general identities") {
  // The native restricted covariance and the one rebuilt from the scaled
  // cycle covariance must agree; predicted_limit cross-checks them.
  for (const Rational& p : {Rational(1), Rational(1, 4), Rational(4, 9)}) {
    auto restricted = restrict_model(tensor_model(Rational(1, 2)), p);
    for (int l1 = 1; l1 <= 3; ++l1)
      for (int l2 = l1; l2 <= 3; ++l2)
        CHECK(predicted_limit(restricted, 2, {l1, l2}).has_value());
  }
}

TEST_CASE("outer product: disjoint cumulants add") {
  auto first = plancherel_model();
  auto second = tensor_model_with_dimension([](int) { return 2; },
                                            std::nullopt);
  auto outer = outer_model(first, second, Rational(1, 2));
  for (int q : {4, 6, 8}) {
    int r1 = q / 2, r2 = q - q / 2;
    auto measure_outer = canonical_measure(outer, q);
    auto measure1 = canonical_measure(first, r1);
    auto measure2 = canonical_measure(second, r2);
    for (const std::vector<int>& ls :
         {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 1},
          std::vector<int>{1, 2}, std::vector<int>{2, 2}}) {
      std::vector<CycleType> args;
      for (int l : ls) args.push_back(CycleType({l}));
      Rational combined =
          exact_cumulant(measure_outer, args, CumulantSpecies::Disjoint);
      Rational part1 =
          exact_cumulant(measure1, args, CumulantSpecies::Disjoint);
      Rational part2 =
          exact_cumulant(measure2, args, CumulantSpecies::Disjoint);
      CHECK(combined == part1 + part2);
    }
  }
}

TEST_CASE("outer predicted constants") {
  auto outer = outer_model(plancherel_model(), plancherel_model(),
                           Rational(1, 4));
  // c'_{l+1} = p1^{(l+1)/2} c1 + p2^{(l+1)/2} c2 with only c_2 nonzero.
  CHECK(*predicted_limit(outer, 1, {1}) == Rational(1, 4) + Rational(3, 4));
  CHECK(*predicted_limit(outer, 1, {2}) == 0);
}

TEST_CASE("induced characters against a hand computation") {
  // Trivial representation of S_2 induced to S_4.
  auto trivial = irreducible_model(
      [](int q) { return YoungDiagram({q}); }, "trivial");
  auto induced = induce_model(trivial, Rational(1, 2));
  CHECK(induced.character(4, CycleType({1, 1, 1, 1})) == 1);
  CHECK(induced.character(4, CycleType({2, 1, 1})) == Rational(1, 6));
  CHECK(induced.character(4, CycleType({4})) == 0);
  // chi at (2,2): classes without enough fixed points vanish.
  CHECK(induced.character(4, CycleType({2, 2})) == 0);
  // Multiplicities by Frobenius reciprocity: (chi(e) + chi(12))/2 gives
  // 1, 2, 1, 1, 0 across (4), (3,1), (2,2), (2,1,1), (1^4); weighting by
  // dimension yields 1, 6, 2, 3 out of 12.
  auto measure = canonical_measure(induced, 4);
  CHECK(measure.probability_of(YoungDiagram({4})) == Rational(1, 12));
  CHECK(measure.probability_of(YoungDiagram({3, 1})) == Rational(1, 2));
  CHECK(measure.probability_of(YoungDiagram({2, 2})) == Rational(1, 6));
  CHECK(measure.probability_of(YoungDiagram({2, 1, 1})) == Rational(1, 4));
  CHECK(measure.probability_of(YoungDiagram({1, 1, 1, 1})) == 0);

  CHECK(*predicted_limit(induced, 1, {1}) == 1);
}

TEST_CASE("tensor product model") {
  auto model = tensor_product_model(
      tensor_model_with_dimension([](int) { return 2; }, std::nullopt),
      tensor_model_with_dimension([](int) { return 3; }, std::nullopt));
  CHECK(model.character(4, CycleType({2, 1, 1})) == Rational(1, 6));
  CHECK(*predicted_limit(model, 2, {2, 2}) == 2);  // Plancherel fluctuations
}

TEST_CASE("class values as free-cumulant polynomials, validated exactly") {
  // Sigma_1 = R_2, Sigma_2 = R_3, Sigma_3 = R_4 + R_2, Sigma_4 = R_5 + 5 R_3
  // on every diagram with at most 10 boxes; the sampling path relies on
  // these.
  for (int q = 1; q <= 10; ++q) {
    const auto& table = CharacterTable::cached(q);
    for (const auto& la : table.diagrams()) {
      auto r = diagram_free_cumulants(la, 5);
      CHECK(central_eigenvalue(CycleType({1}), la, table) == r[1]);
      CHECK(central_eigenvalue(CycleType({2}), la, table) == r[2]);
      CHECK(central_eigenvalue(CycleType({3}), la, table) == r[3] + r[1]);
      CHECK(central_eigenvalue(CycleType({4}), la, table) ==
            r[4] + Rational(5) * r[2]);
    }
  }
}
