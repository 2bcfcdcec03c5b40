#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "matfol/circuits.hpp"
#include "matfol/matroid.hpp"

namespace matfol {

// Weight table of one designated 3-element circuit: a dense map over the 8
// subsets.  Missing entries are a validation error, never defaulted.
struct TripleWeights {
    ElementSet triple;
    std::map<ElementSet, int> w;

    int at(const ElementSet& subset) const;
};

// Minimum dependency weight circuit instance: find the minimum
//   w(C) = sum_{e in C \ U(TT)} w(e) + sum_T w_T(C ∩ T)
// over circuits C with F ⊆ C, reported only when it is at most ell.
struct MdwcInstance {
    MatroidPtr matroid;
    ElementSet required;  // F, between one and three elements
    std::vector<TripleWeights> triples;
    std::map<ElementId, int> weights;  // elements outside all triples
    int ell = 0;

    int dependency_weight(const ElementSet& circuit) const;
};

// Throws MdwcFailureError describing the first violated instance invariant.
void validate_instance(const MdwcInstance& inst);

enum class ColoringMode { Exhaustive, MonteCarlo };

struct ColoringFamily {
    int num_colors = 0;
    ColoringMode mode = ColoringMode::Exhaustive;
    int trials = 0;             // Monte Carlo only
    double failure_bound = 0.;  // Monte Carlo only
    std::vector<std::vector<int>> colorings;  // vertex -> color in [0, num_colors)
};

// Exhaustive: one coloring per vertex subset of size min(ell, n), injective
// there; covers every <= ell-vertex cycle.  Monte Carlo: t uniform colorings
// with (1 - ell!/ell^ell)^t <= failure_bound.
ColoringFamily coloring_family(int num_vertices, int ell, ColoringMode mode,
                               double failure_bound = 1e-6, std::uint64_t seed = 0,
                               const EnumerationBudget& budget = {});

struct ColorCodingOptions {
    ColoringMode mode = ColoringMode::MonteCarlo;
    double failure_bound = 1e-6;
    std::uint64_t seed = 0;
    EnumerationBudget budget{};
};

struct KernelOptions {
    // Bound on 2^(kernel vertices - 1) bipartitions examined brute-force.
    std::uint64_t max_bipartitions = 1u << 22;
};

// Exact reference solver: circuit enumeration with the weight filter.
std::optional<int> mdwc_bruteforce(const MdwcInstance& inst,
                                   const EnumerationBudget& budget = {});

// Internal hook used by the decomposition DP: skip circuits meeting
// `excluded`, keep only circuits passing `keep` (when set).
std::optional<int> mdwc_bruteforce_filtered(
    const MdwcInstance& inst, const ElementSet& excluded,
    const std::function<bool(const ElementSet&)>& keep, const EnumerationBudget& budget = {});

// Color coding for graphic matroids (cycles of length 1..3 enumerated
// directly, rainbow path DP for 4..ell).  Exhaustive mode is exact; Monte
// Carlo may overestimate with probability <= failure_bound per instance.
std::optional<int> mdwc_graphic(const MdwcInstance& inst, const ColorCodingOptions& opts = {});

// Kernelized bond search for cographic matroids with simple TT: identify
// vertex pairs whose min edge-cut exceeds ell, then enumerate bonds of the
// kernel over connected vertex bipartitions.
std::optional<int> mdwc_cographic(const MdwcInstance& inst, const KernelOptions& opts = {});

}  // namespace matfol
