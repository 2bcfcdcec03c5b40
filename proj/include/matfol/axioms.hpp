#pragma once

#include <string>
#include <vector>

#include "matfol/matroid.hpp"

namespace matfol {

struct AxiomReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Exhaustively checks the three independence axioms, rank sanity
// (r(∅)=0, r(X) <= |X|, unit monotonicity) and rank submodularity over all
// subset pairs.  Intended for ground sets of at most `max_elements`.
AxiomReport validate_axioms(const Matroid& m, int max_elements = 9);

}  // namespace matfol
