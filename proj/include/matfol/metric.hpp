#pragma once

#include <optional>
#include <vector>

#include "matfol/circuits.hpp"
#include "matfol/matroid.hpp"

namespace matfol {

// Minimum size of a circuit containing both elements, capped; 0 when e = f,
// nullopt when no common circuit of size <= cap exists.
std::optional<int> element_distance(const Matroid& m, const ElementId& e, const ElementId& f,
                                    int cap, const EnumerationBudget& budget = {});

// All pairwise matroid distances up to a cap; nullopt beyond the cap.
class DistanceTable {
  public:
    static DistanceTable compute(const Matroid& m, int cap,
                                 const EnumerationBudget& budget = {});

    int cap() const { return cap_; }
    int size() const { return n_; }
    std::optional<int> at(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }

  private:
    int n_ = 0;
    int cap_ = 0;
    std::vector<std::optional<int>> table_;
};

// N^M_d(e): elements at matroid distance at most d; always contains e.
ElementSet neighborhood(const Matroid& m, const ElementId& e, int d,
                        const EnumerationBudget& budget = {});

// G^C_{M,d}: elements adjacent when they share a circuit of size <= d.
struct GaifmanGraph {
    int d = 0;
    std::vector<ElementId> elements;  // sorted
    std::vector<std::vector<bool>> adj;
    std::vector<std::vector<int>> neighbors;

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(const ElementId& e) const;
    bool adjacent(int a, int b) const { return adj[a][b]; }
    // Hop distances from a source; nullopt = unreachable.
    std::vector<std::optional<int>> bfs_from(int src) const;
    // Subgraph induced on the given vertex indices (sorted).
    GaifmanGraph induced(const std::vector<int>& keep) const;
};

GaifmanGraph gaifman_graph(const Matroid& m, int d, const EnumerationBudget& budget = {});
// Build directly from a known circuit list (each circuit of size <= d).
GaifmanGraph gaifman_graph_from_circuits(const Matroid& m, int d,
                                         const std::vector<ElementSet>& circuits);

// Breadth-first ball of radius r around x in the Gaifman graph.
ElementSet gaifman_ball(const GaifmanGraph& g, const ElementId& x, int r);

}  // namespace matfol
