#include <doctest.h>

#include <cstdlib>

#include "charfluct/characters.hpp"
#include "charfluct/exact.hpp"
#include "charfluct/models.hpp"

using namespace charfluct;

TEST_CASE("small character values") {
  CHECK(mn_character(YoungDiagram({2, 1}), CycleType({3})) == -1);
  CHECK(mn_character(YoungDiagram({2, 1}), CycleType({1, 1, 1})) == 2);
  CHECK(mn_character(YoungDiagram({2, 1}), CycleType({2, 1})) == 0);
  CHECK(hook_dimension(YoungDiagram({2, 1})) == 2);
  CHECK_THROWS_AS(mn_character(YoungDiagram({2, 1}), CycleType({2})),
                  std::invalid_argument);
  // Trivial representation: character 1 on every class.
  for (int q = 1; q <= 6; ++q) {
    const auto& table = CharacterTable::cached(q);
    int trivial = table.diagram_index(YoungDiagram({q}));
    for (size_t c = 0; c < table.classes().size(); ++c)
      CHECK(table.character(trivial, static_cast<int>(c)) == 1);
  }
}

TEST_CASE("dimension identities") {
  for (int q = 1; q <= 10; ++q) {
    const auto& table = CharacterTable::cached(q);
    Int total = 0;
    for (const auto& la : table.diagrams()) {
      Int dim = table.dimension(la);
      total += dim * dim;
    }
    CHECK(total == factorial(q));
  }
}

TEST_CASE("column orthogonality") {
  for (int q = 2; q <= 6; ++q) {
    const auto& table = CharacterTable::cached(q);
    const int count = static_cast<int>(table.classes().size());
    for (int c1 = 0; c1 < count; ++c1) {
      for (int c2 = 0; c2 < count; ++c2) {
        long long inner = 0;
        for (int l = 0; l < count; ++l)
          inner += table.character(l, c1) * table.character(l, c2);
        if (c1 == c2)
          CHECK(Int(static_cast<long>(inner)) == table.symmetry_order(c1));
        else
          CHECK(inner == 0);
      }
    }
  }
}

TEST_CASE("central eigenvalues") {
  for (int q = 2; q <= 8; ++q) {
    const auto& table = CharacterTable::cached(q);
    for (const auto& la : table.diagrams()) {
      CHECK(central_eigenvalue(CycleType({1}), la, table) == q);
      for (int m = 2; m <= q; ++m) {
        CHECK(central_eigenvalue(CycleType(std::vector<int>(m, 1)), la,
                                 table) == Rational(falling_factorial(q, m)));
      }
    }
  }
  const auto& t3 = CharacterTable::cached(3);
  CHECK(central_eigenvalue(CycleType({2}), YoungDiagram({2, 1}), t3) == 0);
  // Oversized arguments act as zero.
  CHECK(central_eigenvalue(CycleType({4}), YoungDiagram({2, 1}), t3) == 0);
}

TEST_CASE("canonical measures") {
  // Left-regular model: Plancherel weights, exactly.
  for (int q = 1; q <= 10; ++q) {
    auto measure = canonical_measure(plancherel_model(), q);
    const auto& table = CharacterTable::cached(q);
    Rational total = 0;
    for (size_t i = 0; i < measure.diagrams.size(); ++i) {
      Int dim = table.dimension(measure.diagrams[i]);
      CHECK(measure.probability[i] ==
            Rational(dim * dim) / Rational(factorial(q)));
      total += measure.probability[i];
    }
    CHECK(total == 1);
  }

  // A single irreducible: point mass.
  auto point = irreducible_model(
      [](int q) { return staircase_diagram(q); }, "staircase");
  auto measure = canonical_measure(point, 6);
  YoungDiagram shape = staircase_diagram(6);
  for (size_t i = 0; i < measure.diagrams.size(); ++i) {
    CHECK(measure.probability[i] ==
          (measure.diagrams[i] == shape ? Rational(1) : Rational(0)));
  }

  // Two tensor factors at d = 2: symmetric and antisymmetric squares.
  auto tensor2 = tensor_model_with_dimension([](int) { return 2; },
                                             std::nullopt);
  auto m2 = canonical_measure(tensor2, 2);
  CHECK(m2.probability_of(YoungDiagram({2})) == Rational(3, 4));
  CHECK(m2.probability_of(YoungDiagram({1, 1})) == Rational(1, 4));

  // An inconsistent oracle must be rejected.
  RepresentationModel bogus;
  bogus.name = "bogus";
  bogus.character = [](int q, const CycleType& rho) {
    return rho == CycleType({2}).padded(q) ? Rational(1) : Rational(0);
  };
  CHECK_THROWS_AS(canonical_measure(bogus, 3), InvalidModelError);
}

TEST_CASE("exact moments and cumulants of class indicators") {
  // Left-regular: E Sigma_1 = q and E Sigma_l = 0 for 2 <= l <= q.
  for (int q = 2; q <= 10; ++q) {
    auto measure = canonical_measure(plancherel_model(), q);
    CHECK(exact_cumulant(measure, {CycleType({1})},
                         CumulantSpecies::Natural) == q);
    for (int l = 2; l <= q; ++l) {
      CHECK(exact_cumulant(measure, {CycleType({l})},
                           CumulantSpecies::Natural) == 0);
    }
  }
  // k(Sigma_2, Sigma_2) = 2q(q-1).
  for (int q = 4; q <= 12; ++q) {
    auto measure = canonical_measure(plancherel_model(), q);
    CHECK(exact_cumulant(measure, {CycleType({2}), CycleType({2})},
                         CumulantSpecies::Natural) ==
          Rational(2 * q * (q - 1)));
  }
}

TEST_CASE("tensor model characters factor on disjoint supports") {
  auto model = tensor_model_with_dimension([](int) { return 3; },
                                           std::nullopt);
  // Mixed cumulants of disjoint cycles vanish identically.
  for (int q = 5; q <= 8; ++q) {
    CHECK(exact_cycle_cumulant(model, q, {2, 2}) == 0);
    CHECK(exact_cycle_cumulant(model, q, {2, 3}) == 0);
    if (q >= 6) CHECK(exact_cycle_cumulant(model, q, {2, 2, 2}) == 0);
    // Means are the powers of 1/d.
    CHECK(exact_cycle_cumulant(model, q, {3}) == Rational(1, 9));
    CHECK(exact_cycle_cumulant(model, q, {2}) == Rational(1, 3));
  }
}

TEST_CASE("factorization diagnostics") {
  auto rows = factorization_diagnostics(plancherel_model(), {4, 6, 8, 10, 12});
  bool saw_cond3_22 = false;
  bool saw_cond1_l2 = false;
  for (const auto& row : rows) {
    if (row.condition == 3 && row.indices == "2,2") {
      REQUIRE(row.exact.has_value());
      CHECK(*row.exact == Rational(2) * (Rational(1) - Rational(1, row.q)));
      REQUIRE(row.predicted.has_value());
      CHECK(*row.predicted == 2.0);
      saw_cond3_22 = true;
    }
    if (row.condition == 1 && row.indices == "2") {
      CHECK(row.value == 0.0);
      saw_cond1_l2 = true;
    }
  }
  CHECK(saw_cond3_22);
  CHECK(saw_cond1_l2);

  // Tensor model at fixed d: condition 1 at n = 1 equals (sqrt q / d)^{l-1}.
  auto tensor3 = tensor_model_with_dimension([](int) { return 3; },
                                             std::nullopt);
  auto tensor_rows = factorization_diagnostics(tensor3, {6, 8});
  for (const auto& row : tensor_rows) {
    if (row.condition == 1 && row.indices == "3") {
      REQUIRE(row.exact.has_value());
      CHECK(*row.exact == Rational(row.q, 9));  // q^1 * (1/3)^2
    }
  }
}

TEST_CASE("character table serialization round trip") {
  const auto& table = CharacterTable::cached(5);
  auto restored = CharacterTable::from_json(table.to_json());
  CHECK(restored.q() == 5);
  for (const auto& la : table.diagrams()) {
    CHECK(restored.dimension(la) == table.dimension(la));
    for (const auto& rho : table.classes())
      CHECK(restored.character(la, rho) == table.character(la, rho));
  }
}
