#include <doctest.h>

#include <numeric>

#include "charfluct/cumulants.hpp"

using namespace charfluct;

namespace {

Rational mul(const Rational& a, const Rational& b) { return a * b; }

// Finite joint distribution on rational atoms, for oracle moments.
struct FiniteJoint {
  std::vector<Rational> probs;                // per atom
  std::vector<std::vector<Rational>> values;  // values[var][atom]

  MomentFn<Rational> moment_fn() const {
    return [this](const std::vector<int>& subset) {
      Rational out = 0;
      for (size_t a = 0; a < probs.size(); ++a) {
        Rational prod = probs[a];
        for (int i : subset) prod *= values[i][a];
        out += prod;
      }
      return out;
    };
  }
};

}  // namespace

TEST_CASE("partition enumeration counts") {
  CHECK(enumerate_partitions(1).size() == 1);
  CHECK(enumerate_partitions(2).size() == 2);
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(4).size() == 15);
  CHECK(enumerate_partitions(5).size() == 52);
  // Restricted-growth-string order: the one-block partition comes first.
  CHECK(enumerate_partitions(2) ==
        std::vector<SetPartition>{SetPartition::parse("{1,2}"),
                                  SetPartition::parse("{1|2}")});
  CHECK_THROWS_AS(enumerate_partitions(13), std::invalid_argument);
}

TEST_CASE("second cumulant is the covariance") {
  FiniteJoint joint;
  joint.probs = {Rational(1, 3), Rational(1, 6), Rational(1, 2)};
  joint.values = {{Rational(1), Rational(-2), Rational(5, 2)},
                  {Rational(0), Rational(7, 3), Rational(-1)}};
  auto m = joint.moment_fn();
  auto table = cumulant_table<Rational>(2, m, mul);
  Rational expected = m({0, 1}) - m({0}) * m({1});
  CHECK(table.at(std::vector<int>{0, 1}) == expected);
  CHECK(table.at(std::vector<int>{0}) == m({0}));
}

TEST_CASE("cumulants of constants vanish beyond the mean") {
  // Constant variable c: E(prod over S) = c^{|S|}.
  MomentFn<Rational> const_moment = [](const std::vector<int>& s) {
    return rational_pow(Rational(7, 2), static_cast<int>(s.size()));
  };
  for (int n = 2; n <= 4; ++n) {
    auto table = cumulant_table<Rational>(n, const_moment, mul);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(table.at(all) == 0);
  }
}

TEST_CASE("mixed cumulants of independent groups vanish") {
  // (X0, X1) independent of X2: product measure of two finite laws.
  FiniteJoint left;
  left.probs = {Rational(1, 4), Rational(3, 4)};
  left.values = {{Rational(2), Rational(-1)}, {Rational(1, 2), Rational(3)}};
  FiniteJoint right;
  right.probs = {Rational(2, 5), Rational(3, 5)};
  right.values = {{Rational(1), Rational(-4)}};
  MomentFn<Rational> joint_moment =
      [&](const std::vector<int>& subset) -> Rational {
    std::vector<int> ls, rs;
    for (int i : subset)
      (i < 2 ? ls : rs).push_back(i < 2 ? i : i - 2);
    Rational lm = ls.empty() ? Rational(1) : left.moment_fn()(ls);
    Rational rm = rs.empty() ? Rational(1) : right.moment_fn()(rs);
    return lm * rm;
  };
  auto table = cumulant_table<Rational>(3, joint_moment, mul);
  CHECK(table.at(std::vector<int>{0, 2}) == 0);
  CHECK(table.at(std::vector<int>{1, 2}) == 0);
  CHECK(table.at(std::vector<int>{0, 1, 2}) == 0);
  CHECK(table.at(std::vector<int>{0, 1}) != 0);
}

TEST_CASE("moment-cumulant round trip") {
  FiniteJoint joint;
  joint.probs = {Rational(1, 7), Rational(2, 7), Rational(4, 7)};
  joint.values = {
      {Rational(1), Rational(2), Rational(-3)},
      {Rational(0), Rational(5, 3), Rational(1)},
      {Rational(-1, 2), Rational(1), Rational(2)},
      {Rational(4), Rational(-1), Rational(1, 3)},
  };
  auto m = joint.moment_fn();
  auto table = cumulant_table<Rational>(4, m, mul);
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    CHECK(moment_from_cumulants<Rational>(subset, table, mul) == m(subset));
  }
}

TEST_CASE("connected-pair partitions") {
  auto pair = leonov_shiryaev_partitions({1, 1});
  REQUIRE(pair.size() == 1);
  CHECK(pair.front() == SetPartition::parse("{1,2}"));

  auto mixed = leonov_shiryaev_partitions({2, 1});
  std::vector<SetPartition> expected = {SetPartition::parse("{1,2,3}"),
                                        SetPartition::parse("{1,3|2}"),
                                        SetPartition::parse("{2,3|1}")};
  std::sort(expected.begin(), expected.end());
  std::sort(mixed.begin(), mixed.end());
  CHECK(mixed == expected);

  // Merging bound: every contributing partition needs enough fusions.
  for (const std::vector<int>& sizes :
       {std::vector<int>{1, 2, 1}, std::vector<int>{2, 2, 3}}) {
    int n = static_cast<int>(sizes.size());
    for (const auto& pi : leonov_shiryaev_partitions(sizes)) {
      int fusions = 0;
      for (const auto& block : pi.blocks())
        fusions += static_cast<int>(block.size()) - 1;
      CHECK(fusions >= n - 1);
    }
  }
}

TEST_CASE("conditional cumulants: worked example and small identities") {
  for (int q = 2; q <= 6; ++q) {
    auto kid =
        conditional_cumulant({CycleType({1}), CycleType({1, 1})}, q);
    CHECK(kid == Rational(2) * sigma(CycleType({1, 1}), q));

    auto kid11 = conditional_cumulant({CycleType({1}), CycleType({1})}, q);
    CHECK(kid11 == sigma(CycleType({1}), q));
  }
}

TEST_CASE("conditional cumulant routes agree") {
  std::vector<std::vector<int>> tuples = {{1}, {2}, {1, 1}, {1, 2},
                                          {2, 2}, {1, 1, 1}, {1, 1, 2}};
  for (const auto& ls : tuples) {
    int weight = std::accumulate(ls.begin(), ls.end(), 0);
    for (int q : {weight, weight + 1}) {
      std::vector<CycleType> factors;
      std::vector<AlgebraElement> elements;
      for (int l : ls) {
        factors.push_back(CycleType({l}));
        elements.push_back(sigma(CycleType({l}), q));
      }
      CHECK(conditional_cumulant(factors, q) ==
            conditional_cumulant_by_inversion(elements));
    }
  }
}

TEST_CASE("Brillinger composition at n = 2 in closed form") {
  CharacterFn regular = [](const CycleType& rho) {
    return rho.multiplicity(1) == rho.weight() ? Rational(1) : Rational(0);
  };
  const int q = 6;
  auto x1 = sigma(CycleType({2}), q);
  auto x2 = sigma(CycleType({3}), q);
  // k(x1,x2) = k_bullet(k_id(x1), k_id(x2)) + k_bullet(k_id(x1,x2)),
  // with k_id of a single argument being the argument itself.
  Rational lhs = natural_cumulant({x1, x2}, q, regular);
  auto kid12 = conditional_cumulant_by_inversion({x1, x2});
  Rational term_split = disjoint_cumulant({x1, x2}, q, regular);
  Rational term_joint = kid12.expectation(q, regular);
  CHECK(lhs == term_split + term_joint);
  CHECK(lhs == brillinger_compose({x1, x2}, q, regular));
}

TEST_CASE("falling factorial cumulants vanish beyond the mean") {
  CharacterFn regular = [](const CycleType& rho) {
    return rho.multiplicity(1) == rho.weight() ? Rational(1) : Rational(0);
  };
  const int q = 6;
  auto f2 = sigma(CycleType({1, 1}), q);
  auto f3 = sigma(CycleType({1, 1, 1}), q);
  CHECK(natural_cumulant({f2}, q, regular) ==
        Rational(falling_factorial(q, 2)));
  CHECK(natural_cumulant({f2, f3}, q, regular) == 0);
  CHECK(natural_cumulant({f2, f2, f3}, q, regular) == 0);
}
