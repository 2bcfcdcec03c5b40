#include "matfol/metric.hpp"

#include <algorithm>
#include <deque>

namespace matfol {

std::optional<int> element_distance(const Matroid& m, const ElementId& e, const ElementId& f,
                                    int cap, const EnumerationBudget& budget) {
    m.index_of(e);
    m.index_of(f);
    if (cap < 0) throw Error("element_distance: cap must be non-negative");
    if (e == f) return 0;
    std::optional<int> found;
    for_each_circuit_up_to(m, cap, ElementSet{e, f}, budget, [&](const ElementSet& c) {
        found = static_cast<int>(c.size());
        return false;  // circuits arrive by increasing size
    });
    return found;
}

DistanceTable DistanceTable::compute(const Matroid& m, int cap,
                                     const EnumerationBudget& budget) {
    DistanceTable t;
    t.n_ = m.size();
    t.cap_ = cap;
    t.table_.assign(static_cast<std::size_t>(t.n_) * t.n_, std::nullopt);
    for (int i = 0; i < t.n_; ++i) t.table_[static_cast<std::size_t>(i) * t.n_ + i] = 0;
    for_each_circuit_up_to(m, cap, {}, budget, [&](const ElementSet& c) {
        const int s = static_cast<int>(c.size());
        std::vector<int> idx = m.indices_of(c);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = 0; b < idx.size(); ++b) {
                if (a == b) continue;
                auto& cell = t.table_[static_cast<std::size_t>(idx[a]) * t.n_ + idx[b]];
                if (!cell || *cell > s) cell = s;
            }
        }
        return true;
    });
    return t;
}

ElementSet neighborhood(const Matroid& m, const ElementId& e, int d,
                        const EnumerationBudget& budget) {
    m.index_of(e);
    if (d < 0) throw Error("neighborhood: d must be non-negative");
    ElementSet out{e};
    for_each_circuit_up_to(m, d, ElementSet{e}, budget, [&](const ElementSet& c) {
        out = out.unite(c);
        return true;
    });
    return out;
}

int GaifmanGraph::index_of(const ElementId& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e) {
        throw UnknownElementError("gaifman graph: unknown element " + e);
    }
    return static_cast<int>(it - elements.begin());
}

std::vector<std::optional<int>> GaifmanGraph::bfs_from(int src) const {
    std::vector<std::optional<int>> dist(size());
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : neighbors[v]) {
            if (!dist[w]) {
                dist[w] = *dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

GaifmanGraph GaifmanGraph::induced(const std::vector<int>& keep) const {
    GaifmanGraph g;
    g.d = d;
    g.elements.reserve(keep.size());
    for (int v : keep) g.elements.push_back(elements[v]);
    const int k = static_cast<int>(keep.size());
    g.adj.assign(k, std::vector<bool>(k, false));
    g.neighbors.assign(k, {});
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            if (adj[keep[a]][keep[b]]) {
                g.adj[a][b] = g.adj[b][a] = true;
                g.neighbors[a].push_back(b);
                g.neighbors[b].push_back(a);
            }
        }
    }
    return g;
}

GaifmanGraph gaifman_graph_from_circuits(const Matroid& m, int d,
                                         const std::vector<ElementSet>& circuits) {
    GaifmanGraph g;
    g.d = d;
    g.elements = m.elements();
    const int n = m.size();
    g.adj.assign(n, std::vector<bool>(n, false));
    for (const auto& c : circuits) {
        std::vector<int> idx = m.indices_of(c);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                g.adj[idx[a]][idx[b]] = g.adj[idx[b]][idx[a]] = true;
            }
        }
    }
    g.neighbors.assign(n, {});
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.adj[a][b]) g.neighbors[a].push_back(b);
        }
    }
    return g;
}

GaifmanGraph gaifman_graph(const Matroid& m, int d, const EnumerationBudget& budget) {
    if (d < 1) throw Error("gaifman_graph: d must be at least 1");
    return gaifman_graph_from_circuits(m, d, circuits_up_to(m, d, {}, budget));
}

ElementSet gaifman_ball(const GaifmanGraph& g, const ElementId& x, int r) {
    if (r < 0) throw Error("gaifman_ball: radius must be non-negative");
    const int src = g.index_of(x);
    auto dist = g.bfs_from(src);
    std::vector<ElementId> ids;
    for (int v = 0; v < g.size(); ++v) {
        if (dist[v] && *dist[v] <= r) ids.push_back(g.elements[v]);
    }
    return ElementSet(std::move(ids));
}

}  // namespace matfol
