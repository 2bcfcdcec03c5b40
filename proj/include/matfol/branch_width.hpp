#pragma once

#include "matfol/matroid.hpp"

namespace matfol {

// Exact branch-width: minimum over subcubic trees with leaves labeled by the
// elements of the maximum edge width r(A) + r(B) - r(M) + 1.  Exponential
// search with memoization on bipartitions; test-oracle scale only.
int branch_width_bruteforce(const Matroid& m, int max_elements = 10);

}  // namespace matfol
