#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "charfluct/fluctuation.hpp"
#include "charfluct/k_statistics.hpp"
#include "charfluct/rng.hpp"
#include "charfluct/rsk.hpp"

using namespace charfluct;

namespace {

int longest_increasing_subsequence(const std::vector<int>& word) {
  // Weakly increasing, to match insertion on words with repeats.
  std::vector<int> tails;
  for (int x : word) {
    auto it = std::upper_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

}  // namespace

TEST_CASE("insertion shapes") {
  std::vector<int> word = {3, 1, 2};
  CHECK(rsk_shape(word) == YoungDiagram({2, 1}));
  std::vector<int> increasing = {1, 2, 3, 4};
  CHECK(rsk_shape(increasing) == YoungDiagram({4}));
  std::vector<int> decreasing = {4, 3, 2, 1};
  CHECK(rsk_shape(decreasing) == YoungDiagram({1, 1, 1, 1}));

  // First row length = longest weakly increasing subsequence.
  RngStream rng(7, 0);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng.uniform_int(12);
    std::vector<int> w(n);
    for (int& x : w) x = 1 + rng.uniform_int(5);
    CHECK(rsk_shape(w).rows()[0] == longest_increasing_subsequence(w));
  }
}

TEST_CASE("degenerate sampler cases") {
  RngStream rng(1, 0);
  CHECK(sample_plancherel(1, rng) == YoungDiagram({1}));
  CHECK(sample_schur_weyl(5, 1, rng) == YoungDiagram({5}));
  // Two boxes: both shapes appear with equal probability.
  int twos = 0, total = 4000;
  for (int s = 0; s < total; ++s) {
    RngStream stream(11, static_cast<std::uint64_t>(s));
    if (sample_plancherel(2, stream) == YoungDiagram({2})) ++twos;
  }
  CHECK(twos > total / 2 - 4 * 32);  // 4 sigma around n/2, sigma ~ 31.6
  CHECK(twos < total / 2 + 4 * 32);
}

TEST_CASE("sampling is reproducible and thread-count independent") {
  auto obs = std::vector<Observable>{parse_observable("R2"),
                                     parse_observable("R3")};
  auto a = sample_batch(plancherel_model(), 20, 64, obs, 99, 1);
  auto b = sample_batch(plancherel_model(), 20, 64, obs, 99, 4);
  CHECK(a.values == b.values);
  auto c = sample_batch(plancherel_model(), 20, 64, obs, 100, 1);
  CHECK(a.values != c.values);
}

TEST_CASE("sampler frequencies match the canonical measures") {
  int threads = 4;
  auto plancherel = sampler_chi_square(plancherel_model(), 6, 20000, 123,
                                       0.001, threads);
  CHECK(plancherel.pass);
  CHECK(plancherel.dof == 10);  // p(6) - 1

  auto schur_weyl = sampler_chi_square(
      tensor_model_with_dimension([](int) { return 3; }, std::nullopt), 6,
      20000, 321, 0.001, threads);
  CHECK(schur_weyl.pass);
  CHECK(schur_weyl.dof == 6);  // seven diagrams with at most three rows
}

TEST_CASE("k-statistics") {
  RngStream rng(5, 0);
  std::vector<double> constant(100, 3.25);
  auto stats = k_statistics(constant, 4, 50, rng);
  CHECK(stats.k1 == doctest::Approx(3.25));
  CHECK(stats.k2 == 0);
  CHECK(stats.k3 == 0);
  CHECK(stats.k4 == 0);
  CHECK(stats.se2 == 0);

  std::vector<double> tiny(15, 1.0);
  CHECK_THROWS_AS(k_statistics(tiny, 2, 10, rng), std::invalid_argument);
}

TEST_CASE("k-statistics calibration on Gaussian input") {
  // Standard-normal synthetic draws must recover (0, 1, 0, 0) within three
  // bootstrap standard errors in at least 99 of 100 runs, per statistic.
  int runs = 100, n = 1000;
  int ok1 = 0, ok2 = 0, ok3 = 0, ok4 = 0;
  for (int run = 0; run < runs; ++run) {
    RngStream rng(2024, static_cast<std::uint64_t>(run));
    std::vector<double> xs(n);
    for (double& x : xs) x = rng.next_normal();
    RngStream boot(4048, static_cast<std::uint64_t>(run));
    auto stats = k_statistics(xs, 4, 120, boot);
    if (std::fabs(stats.k1 - 0) <= 3 * stats.se1) ++ok1;
    if (std::fabs(stats.k2 - 1) <= 3 * stats.se2) ++ok2;
    if (std::fabs(stats.k3 - 0) <= 3 * stats.se3) ++ok3;
    if (std::fabs(stats.k4 - 0) <= 3 * stats.se4) ++ok4;
  }
  CHECK(ok1 >= 99);
  CHECK(ok2 >= 99);
  CHECK(ok3 >= 99);
  CHECK(ok4 >= 99);
}

TEST_CASE("fluctuation report basics") {
  auto obs = std::vector<Observable>{parse_observable("R2"),
                                     parse_observable("R3"),
                                     parse_observable("ptilde2")};
  auto rows = fluctuation_report(plancherel_model(), {49}, 120, obs, 31, 2, 40);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    CHECK(std::isfinite(row.estimate));
    if (row.observable == "R2" && row.statistic == "mean_scaled") {
      CHECK(row.estimate == doctest::Approx(1.0));  // R_2 = q exactly
      REQUIRE(row.predicted.has_value());
      CHECK(*row.predicted == 1.0);
    }
    if (row.observable == "R2" && row.statistic == "var_scaled")
      CHECK(row.estimate == 0.0);
    if (row.observable == "ptilde2" && row.statistic == "var_scaled")
      CHECK(row.estimate == 0.0);  // ptilde_2 = 2q is deterministic
  }
  // Sampling is defined only for the Plancherel and tensor models.
  CHECK_THROWS_WITH_AS(
      sample_batch(irreducible_model(staircase_diagram, "stairs"), 10, 10,
                   obs, 1, 1),
      doctest::Contains("exact mode"), std::invalid_argument);
}

TEST_CASE("observable parsing") {
  CHECK(parse_observable("R3").index() == 3);
  CHECK(parse_observable("sigma2").index() == 3);
  CHECK(parse_observable("ptilde4").index() == 4);
  CHECK_THROWS(parse_observable("R1"));
  CHECK_THROWS(parse_observable("sigma5"));
  CHECK_THROWS(parse_observable("bogus"));
}

TEST_CASE("rng streams are deterministic and distinct") {
  RngStream a(42, 0), b(42, 0), c(42, 1);
  for (int i = 0; i < 16; ++i) {
    auto va = a.next();
    CHECK(va == b.next());
  }
  bool all_equal = true;
  RngStream a2(42, 0);
  for (int i = 0; i < 16; ++i)
    if (a2.next() != c.next()) all_equal = false;
  CHECK(!all_equal);
  RngStream u(7, 3);
  for (int i = 0; i < 1000; ++i) {
    int v = u.uniform_int(10);
    CHECK(v >= 0);
    CHECK(v < 10);
    double x = u.next_unit();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}
