#pragma once

#include <span>
#include <vector>

#include "charfluct/rng.hpp"
#include "charfluct/young_diagram.hpp"

namespace charfluct {

// Shape of the insertion tableau of the word under row insertion; only the
// shape is kept, no recording tableau.
YoungDiagram rsk_shape(std::span<const int> word);

// Shape of a uniform permutation of {1..q}.
YoungDiagram sample_plancherel(int q, RngStream& rng);
// Shape of a uniform word in {1..d}^q.
YoungDiagram sample_schur_weyl(int q, int d, RngStream& rng);

}  // namespace charfluct
