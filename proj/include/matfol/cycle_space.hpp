#pragma once

#include <memory>
#include <vector>

#include "matfol/matroid.hpp"

namespace matfol {

// Basis of the cycle space of a binary matroid: GF(2)-independent indicator
// vectors of cycles (disjoint unions of circuits).  Dimension is |E| - r(E).
struct CycleSpace {
    ElementSet ground;
    std::vector<ElementSet> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
    // Membership test: X lies in the span of the basis.
    bool contains(const ElementSet& x) const;
    // Every GF(2) combination of the basis, as element sets (2^dim of them).
    std::vector<ElementSet> enumerate() const;
};

// Cycle space via fundamental circuits over a lexicographically greedy base.
// Valid for any matroid that is binary (graphic and cographic included).
CycleSpace cycle_space(const Matroid& m);

// GF(2) representation of an oracle-given binary matroid: columns of base
// elements form an identity, every other column is the fundamental-circuit
// pattern.  Under the promise that m is binary this represents m exactly.
std::shared_ptr<const BinaryMatroid> as_binary(const Matroid& m);

}  // namespace matfol
