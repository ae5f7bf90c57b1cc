#include <doctest.h>

#include <numeric>

#include "charfluct/conjugacy.hpp"

using namespace charfluct;

namespace {

std::vector<CycleType> types_up_to(int max_weight) {
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

}  // namespace

TEST_CASE("class indicator basics") {
  // sigma_1 at q: q identity terms with singleton supports.
  for (int q = 1; q <= 5; ++q) {
    auto s1 = sigma(CycleType({1}), q);
    CHECK(s1.term_count() == q);
    for (const auto& [p, c] : s1.terms()) {
      CHECK(p.support_size() == 1);
      CHECK(c == 1);
    }
  }
  // Too few points: the sum runs over the empty set.
  CHECK(sigma(CycleType({2, 1}), 2).is_zero());
  // Each transposition of S_3 appears twice (two rotations of the cycle).
  auto s2 = sigma(CycleType({2}), 3);
  CHECK(s2.term_count() == 3);
  for (const auto& [p, c] : s2.terms()) CHECK(c == 2);
  CHECK(s2.coefficient(PartialPermutation::from_cycles({{1, 3}})) == 2);
}

TEST_CASE("multiplicity rule validated against brute-force construction") {
  for (const auto& t : types_up_to(5)) {
    Int mult = sigma_multiplicity(t);
    for (int q = t.weight(); q <= 5; ++q) {
      auto element = sigma(t, q);
      for (const auto& [p, c] : element.terms()) {
        CHECK(p.cycle_type() == t);
        CHECK(c == Rational(mult));
      }
      CHECK(Rational(element.term_count()) * Rational(mult) ==
            Rational(falling_factorial(q, t.weight())));
    }
  }
}

TEST_CASE("sigma basis decomposition") {
  // Round trip.
  for (int q = 2; q <= 5; ++q) {
    auto decomposition = decompose_in_sigma_basis(sigma(CycleType({2}), q), q);
    CHECK(decomposition ==
          std::map<CycleType, Rational>{{CycleType({2}), 1}});
  }
  // The worked product Sigma_1 Sigma_{1,1} = Sigma_{1,1,1} + 2 Sigma_{1,1}.
  for (int q = 3; q <= 6; ++q) {
    auto product = sigma(CycleType({1}), q) * sigma(CycleType({1, 1}), q);
    auto decomposition = decompose_in_sigma_basis(product, q);
    CHECK(decomposition ==
          std::map<CycleType, Rational>{{CycleType({1, 1, 1}), 1},
                                        {CycleType({1, 1}), 2}});
  }
  // Sigma_2 Sigma_2 = Sigma_{2,2} + 4 Sigma_3 + 2 Sigma_{1,1}.
  for (int q = 4; q <= 5; ++q) {
    auto product = sigma(CycleType({2}), q) * sigma(CycleType({2}), q);
    auto decomposition = decompose_in_sigma_basis(product, q);
    CHECK(decomposition ==
          std::map<CycleType, Rational>{{CycleType({2, 2}), 1},
                                        {CycleType({3}), 4},
                                        {CycleType({1, 1}), 2}});
  }
  // A single transposition is not central.
  auto lone = AlgebraElement::term(PartialPermutation::from_cycles({{1, 2}}));
  CHECK_THROWS_AS(decompose_in_sigma_basis(lone, 3), NotCentralError);
  // Support escaping the ground set is rejected.
  auto outside = AlgebraElement::term(PartialPermutation::identity_on({7}));
  CHECK_THROWS_AS(decompose_in_sigma_basis(outside, 3), NotCentralError);
}

TEST_CASE("partition-indexed classes match plain indicators") {
  for (int q = 3; q <= 5; ++q) {
    CHECK(sigma_of_partition(SetPartition::parse("{1|2}"), q) ==
          sigma(CycleType({1}), q));
    CHECK(sigma_of_partition(SetPartition::parse("{1,3|2,4}"), q) ==
          sigma(CycleType({1}), q));
    CHECK(sigma_of_partition(SetPartition::parse("{1,3|2|4}"), q) ==
          sigma(CycleType({1, 1}), q));
  }
}

TEST_CASE("fat partition") {
  auto fat = fat_partition(SetPartition::parse("{1,3|2,5,7|4|6}"));
  CHECK(fat.of_primed(1) == 3);
  CHECK(fat.of_primed(3) == 1);
  CHECK(fat.of_primed(2) == 5);
  CHECK(fat.of_primed(5) == 7);
  CHECK(fat.of_primed(7) == 2);
  CHECK(fat.of_primed(4) == 4);
  CHECK(fat.of_primed(6) == 6);

  auto single = fat_partition(SetPartition::parse("{1}"));
  CHECK(single.of_primed(1) == 1);

  auto pair = fat_partition(SetPartition::parse("{1,2}"));
  CHECK(pair.of_primed(1) == 2);
  CHECK(pair.of_primed(2) == 1);
}

TEST_CASE("explicit cycle type and winding") {
  CHECK(explicit_cycle_type(SetPartition::parse("{1,3|2,5,7|4|6}")) ==
        CycleType({2, 1}));
  CHECK(explicit_cycle_type(SetPartition::parse("{1|2}")) == CycleType({1}));
  // The boundary cycle (1,2,3,4) winds three times.
  CHECK(explicit_cycle_type(SetPartition::parse("{1,3|2,4}")) ==
        CycleType({1}));
  CHECK_THROWS_AS(explicit_cycle_type(SetPartition::parse("{1,2}")),
                  DegenerateWindingError);
  CHECK(has_degenerate_winding(SetPartition::parse("{1,2}")));
  CHECK(sigma_of_partition(SetPartition::parse("{1,2}"), 4).is_zero());
}

TEST_CASE("genus") {
  CHECK(partition_genus(SetPartition::parse("{1,3|2,5,7|4|6}")) == 1);
  CHECK(partition_genus(SetPartition::parse("{1,3|2,4}")) == 1);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      if (pi.is_noncrossing()) CHECK(partition_genus(pi) == 0);
    }
  }
}

TEST_CASE("product expansion worked example") {
  auto pi1 = SetPartition::parse("{1,3|2,4}");
  auto pi2 = SetPartition::parse("{1,3|2|4}");  // relabeled second factor
  auto full = product_expansion({pi1, pi2}, ExpansionMode::Full);
  std::vector<SetPartition> expected = {
      SetPartition::parse("{1,3|2,4,8|5,7|6}"),
      SetPartition::parse("{1,3,6|2,4,8|5,7}"),
      SetPartition::parse("{1,3,5,7|2,4,8|6}"),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(full == expected);

  auto conditional =
      product_expansion({pi1, pi2}, ExpansionMode::ConditionalCumulant);
  std::vector<SetPartition> expected_conditional = {
      SetPartition::parse("{1,3,6|2,4,8|5,7}"),
      SetPartition::parse("{1,3,5,7|2,4,8|6}"),
  };
  std::sort(expected_conditional.begin(), expected_conditional.end());
  CHECK(conditional == expected_conditional);

  // Single factor: the partition itself, in every mode.
  for (auto mode : {ExpansionMode::Disjoint, ExpansionMode::Full,
                    ExpansionMode::ConditionalCumulant}) {
    auto single = product_expansion({pi1}, mode);
    REQUIRE(single.size() == 1);
    CHECK(single.front() == pi1);
  }
}

TEST_CASE("ranged expansion validates its ranges") {
  auto pi1 = SetPartition::parse("{1|2}");
  auto pi2 = SetPartition::parse("{1|2}");
  CHECK(product_expansion_ranged({pi1, pi2}, {{1, 2}, {3, 4}},
                                 ExpansionMode::Full)
            .size() > 0);
  CHECK_THROWS_AS(product_expansion_ranged({pi1, pi2}, {{1, 2}, {2, 3}},
                                           ExpansionMode::Full),
                  std::invalid_argument);
  CHECK_THROWS_AS(product_expansion_ranged({pi1, pi2}, {{1, 2}, {4, 5}},
                                           ExpansionMode::Full),
                  std::invalid_argument);
}

TEST_CASE("gadgets reproduce their cycle types") {
  for (const auto& t : types_up_to(6)) {
    CHECK(explicit_cycle_type(sigma_gadget(t)) == t);
  }
}

TEST_CASE("partition-indexed classes equal their explicit cycle types") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_partitions(n)) {
      if (has_degenerate_winding(pi)) {
        for (int q = n; q <= n + 1; ++q)
          CHECK(sigma_of_partition(pi, q).is_zero());
        continue;
      }
      auto k = explicit_cycle_type(pi);
      for (int q = n; q <= n + 1; ++q)
        CHECK(sigma_of_partition(pi, q) == sigma(k, q));
      CHECK(k.degree() == n - 2 * partition_genus(pi));
    }
  }
}

TEST_CASE("products of partition-indexed classes expand correctly") {
  // Two-factor products over small partitions, against brute force.
  for (int n1 = 2; n1 <= 3; ++n1) {
    for (int n2 = 2; n2 <= 3; ++n2) {
      for (const auto& a : enumerate_partitions(n1)) {
        for (const auto& b : enumerate_partitions(n2)) {
          int q = n1 + n2;
          AlgebraElement product =
              sigma_of_partition(a, q) * sigma_of_partition(b, q);
          AlgebraElement expanded;
          for (const auto& s : product_expansion({a, b}, ExpansionMode::Full))
            expanded += sigma_of_partition(s, q);
          CHECK(product == expanded);
          AlgebraElement bullet = disjoint_product(sigma_of_partition(a, q),
                                                   sigma_of_partition(b, q));
          auto glued = product_expansion({a, b}, ExpansionMode::Disjoint);
          CHECK(bullet == sigma_of_partition(glued.front(), q));
        }
      }
    }
  }
}
