#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "matfol/matroid.hpp"

namespace matfol {

// Guard for every brute-force subset enumeration: fail loudly instead of
// hanging when the subset count would exceed the budget.
struct EnumerationBudget {
    std::uint64_t max_subsets = 10'000'000;
};

// Number of subsets the enumeration below would examine; saturates at +inf.
std::uint64_t enumeration_cost(int n, int max_size, int must_contain_size);

// All circuits C with |C| <= max_size and must_contain ⊆ C, in increasing
// size then lexicographic order on the sorted element labels.
std::vector<ElementSet> circuits_up_to(const Matroid& m, int max_size,
                                       const ElementSet& must_contain = {},
                                       const EnumerationBudget& budget = {});

// Visitor form; returning false from the callback stops the enumeration.
void for_each_circuit_up_to(const Matroid& m, int max_size, const ElementSet& must_contain,
                            const EnumerationBudget& budget,
                            const std::function<bool(const ElementSet&)>& visit);

// Whether every pair of distinct elements lies in a common circuit.
bool is_connected(const Matroid& m, const EnumerationBudget& budget = {});

}  // namespace matfol
