#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charfluct/models.hpp"
#include "charfluct/rational.hpp"

#include <json.hpp>

namespace charfluct {

// Experiment description shared by the exact and sampling front ends.
// Serialized into every output for provenance; precedence is
// command line > config file > defaults.
struct ExperimentConfig {
  std::string model = "plancherel";
  Rational p = Rational(1, 2);       // tensor/restrict/induce/outer ratio
  std::optional<int> tensor_dim;     // explicit d overrides p for tensor
  std::string base = "plancherel";   // combinator operand, mini-spec syntax
  std::string base2 = "plancherel";  // second operand (outer/tensor-product)
  std::string preset = "staircase";  // irreducible shape preset
  std::vector<int> qs = {100, 400, 900, 1600};
  int samples = 4000;
  std::uint64_t seed = 42;
  std::vector<std::string> observables = {"R2", "R3", "R4", "R5"};
  std::string out = "charfluct-report";
  int exact_max_q = 14;
  int bootstrap = 200;
  int threads = 0;  // 0 = hardware concurrency

  // "a/b", decimal, or integer.
  static Rational parse_ratio(const std::string& s);

  // key = value lines, '#' comments.
  static ExperimentConfig from_file(const std::string& path);
  void apply(const std::string& key, const std::string& value);

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  std::string to_key_values() const;

  // Model names: plancherel | tensor | irreducible | restrict | induce |
  // outer | tensor-product. Operands use the mini-spec syntax
  // "plancherel", "tensor:<ratio>", "irreducible:<preset>".
  RepresentationModel build_model() const;

  void validate() const;
};

RepresentationModel model_from_spec(const std::string& spec);

}  // namespace charfluct
