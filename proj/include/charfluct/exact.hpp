#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charfluct/characters.hpp"
#include "charfluct/cycle_type.hpp"
#include "charfluct/models.hpp"
#include "charfluct/rational.hpp"
#include "charfluct/young_diagram.hpp"

namespace charfluct {

struct InvalidModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Probability on the diagrams of q proportional to
// dimension x multiplicity of the irreducible component.
struct CanonicalMeasure {
  int q = 0;
  std::vector<YoungDiagram> diagrams;  // all diagrams of q, table order
  std::vector<Rational> probability;  // nonnegative, sums to one

  Rational probability_of(const YoungDiagram& la) const;
};

// Multiplicities through class-sums of character inner products; throws
// InvalidModelError when the oracle yields a negative multiplicity.
CanonicalMeasure canonical_measure(const RepresentationModel& model, int q);

// Scalar through which the class indicator of k acts on the irreducible la:
// (q falling |k|) times the normalized irreducible character. Zero when k
// does not fit inside q.
Rational central_eigenvalue(const CycleType& k, const YoungDiagram& la,
                            const CharacterTable& table);

enum class CumulantSpecies { Natural, Disjoint };

// Exact cumulants of class indicators under the canonical measure. Natural
// species: classical cumulants of the central eigenvalues. Disjoint species:
// partition inversion over concatenated-class moments.
Rational exact_cumulant(const RepresentationModel& model, int q,
                        const std::vector<CycleType>& args,
                        CumulantSpecies species);
Rational exact_cumulant(const CanonicalMeasure& measure,
                        const std::vector<CycleType>& args,
                        CumulantSpecies species);

// Exact joint cumulant of the free-cumulant observables R_{index} of a
// canonical-measure random diagram.
Rational exact_free_cumulant_cumulant(const CanonicalMeasure& measure,
                                      const std::vector<int>& indices);

// Exact n-th joint cumulant of fixed disjoint cycles of the given lengths
// (as group-algebra random variables); requires sum of lengths <= q.
Rational exact_cycle_cumulant(const RepresentationModel& model, int q,
                              const std::vector<int>& lengths);

// One row of the factorization diagnostics: the scaled quantity for one of
// the four conditions at one size. The exact value is present when the
// scaling exponent is an integer power of q.
struct DiagnosticsRow {
  int q = 0;
  int condition = 0;          // 1..4
  std::string indices;        // "2" or "2,3"
  double value = 0;           // cumulant times the scaling power of q
  std::optional<Rational> exact;
  std::optional<double> predicted;
};

// Scaled sequences for conditions 1..4 at n in {1, 2} over the given sizes.
// Cycle lengths default to 1..3 for n = 1 and all pairs with l_i <= 2 plus
// (2,2),(2,3) for n = 2; pass explicit lists to override.
std::vector<DiagnosticsRow> factorization_diagnostics(
    const RepresentationModel& model, const std::vector<int>& qs,
    int max_n = 2, const std::vector<int>& single_ls = {1, 2, 3},
    const std::vector<std::pair<int, int>>& pair_ls = {{1, 1},
                                                       {1, 2},
                                                       {2, 2},
                                                       {2, 3}});

}  // namespace charfluct
