#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace charfluct {

// Deliberate corruptions for exercising the failure paths of the verifier.
enum class FaultInjection { None, WindingSign };

struct CheckResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  std::string details;  // first failure, or a note
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // e.g. the degenerate-winding inventory

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string summary() const;
};

struct AlgebraVerifyOptions {
  int max_total = 6;     // total cycle-type size in product identities
  int max_q = 6;         // ground-set sizes for the exact product suite
  int partitions_n = 7;  // sigma_pi coherence over partitions of n <= this
  int degree_n = 8;      // degree/genus identity over partitions of n <= this
  FaultInjection fault = FaultInjection::None;
};

// Exhaustive small-instance identities of the class-indicator algebra:
// the multiplicity rule, products against the partition expansion, the
// worked decomposition of Sigma_1 Sigma_{1,1}, coherence of the
// partition-indexed classes with their explicit cycle types, degree = n - 2g,
// the genus inequality for conditional expansions, and falling-factorial
// expectations.
VerifyReport verify_algebra(const AlgebraVerifyOptions& options = {});

struct CumulantVerifyOptions {
  int max_q = 8;
  int max_n = 3;
  int max_l = 3;         // single-cycle lengths per argument
  int pair_weight = 6;   // l1 + l2 bound for the top-degree identity
};

// Cumulant-species identities: the two conditional-cumulant routes, the
// Brillinger composition against exact natural cumulants, the
// connected-pairs formula for disjoint cumulants, top-degree of the second
// conditional cumulant, the natural-minus-disjoint decomposition, and
// falling-factorial cumulants. Runs over the Plancherel and tensor models.
VerifyReport verify_cumulants(const CumulantVerifyOptions& options = {});

}  // namespace charfluct
