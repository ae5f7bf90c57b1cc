#pragma once

#include <cstdint>

namespace charfluct {

// Seedable, splittable generator (xoshiro256** seeded through splitmix64).
// Streams derived from the same master seed by distinct stream indices are
// independent for our purposes and reproducible across runs and platforms.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream);

  std::uint64_t next();
  // Uniform in [0, 1) with 53 random bits.
  double next_unit();
  // Uniform in [0, n), unbiased.
  int uniform_int(int n);
  // Standard normal (Box-Muller).
  double next_normal();

 private:
  std::uint64_t state_[4];
  double spare_normal_ = 0;
  bool has_spare_ = false;
};

}  // namespace charfluct
