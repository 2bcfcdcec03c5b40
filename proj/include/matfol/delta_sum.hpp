#pragma once

#include <memory>

#include "matfol/cycle_space.hpp"
#include "matfol/matroid.hpp"

namespace matfol {

enum class SumKind { One, Two, Three };

SumKind sum_kind_for_shared_size(std::size_t shared_size);

// Checks the kind-specific side conditions; returns a diagnostic or empty.
std::string check_sum_preconditions(const Matroid& m1, const Matroid& m2, SumKind kind);

// Binary matroid on E1 △ E2 whose cycles are exactly
// { C1 △ C2 : Ci a cycle of Mi } restricted to E1 △ E2.  Inputs must be
// binary (graphic/cographic/uniform pieces are converted via as_binary).
// Throws SumPreconditionError when the kind conditions fail.
std::shared_ptr<const BinaryMatroid> delta_sum(const Matroid& m1, const Matroid& m2,
                                               SumKind kind);

}  // namespace matfol
