#include "matfol/matroid.hpp"

#include <algorithm>
#include <numeric>

namespace matfol {

namespace {

// Union-find over a small vertex set.
class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns true when the two were in different components.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

  private:
    std::vector<int> parent_;
};

}  // namespace

Matroid::Matroid(std::vector<ElementId> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i + 1 < elements_.size(); ++i) {
        if (elements_[i] == elements_[i + 1]) {
            throw Error("duplicate element label in ground set: " + elements_[i]);
        }
    }
    ground_ = ElementSet(elements_);
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        index_.emplace(elements_[i], static_cast<int>(i));
    }
}

int Matroid::index_of(const ElementId& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
        throw UnknownElementError("unknown element: " + e);
    }
    return it->second;
}

std::optional<int> Matroid::find_index(const ElementId& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> Matroid::indices_of(const ElementSet& x) const {
    std::vector<int> idx;
    idx.reserve(x.size());
    for (const auto& e : x) idx.push_back(index_of(e));
    std::sort(idx.begin(), idx.end());
    return idx;
}

ElementSet Matroid::set_of(std::span<const int> idx) const {
    std::vector<ElementId> ids;
    ids.reserve(idx.size());
    for (int i : idx) ids.push_back(elements_[i]);
    return ElementSet(std::move(ids));
}

int Matroid::rank(const ElementSet& x) const {
    return rank_of(indices_of(x));
}

int Matroid::full_rank() const {
    std::vector<int> all(elements_.size());
    std::iota(all.begin(), all.end(), 0);
    return rank_of(all);
}

bool Matroid::is_independent(const ElementSet& x) const {
    return rank(x) == static_cast<int>(x.size());
}

bool Matroid::is_independent_idx(std::span<const int> idx) const {
    return rank_of(idx) == static_cast<int>(idx.size());
}

bool Matroid::is_circuit(const ElementSet& x) const {
    return is_circuit_idx(indices_of(x));
}

bool Matroid::is_circuit_idx(std::span<const int> idx) const {
    const int k = static_cast<int>(idx.size());
    if (k == 0) return false;
    if (rank_of(idx) == k) return false;  // independent
    std::vector<int> sub;
    sub.reserve(k - 1);
    for (int skip = 0; skip < k; ++skip) {
        sub.clear();
        for (int i = 0; i < k; ++i) {
            if (i != skip) sub.push_back(idx[i]);
        }
        if (rank_of(sub) != k - 1) return false;  // some deletion still dependent
    }
    return true;
}

bool Matroid::is_loop(const ElementId& e) const {
    const int idx[1] = {index_of(e)};
    return rank_of(idx) == 0;
}

bool Matroid::is_coloop(const ElementId& e) const {
    return rank(ground_set().without(e)) == full_rank() - 1;
}

bool Matroid::is_cocircuit(const ElementSet& x) const {
    // Circuit of the dual, computed through the rank identity.
    const int n = size();
    const int rE = full_rank();
    auto dual_rank = [&](const ElementSet& s) {
        return static_cast<int>(s.size()) + rank(s.complement_within(ground_set())) - rE;
    };
    const int k = static_cast<int>(x.size());
    if (k == 0 || dual_rank(x) == k) return false;
    for (const auto& e : x) {
        ElementSet sub = x.without(e);
        if (dual_rank(sub) != k - 1) return false;
    }
    (void)n;
    return true;
}

// ---------------------------------------------------------------------------
// BinaryMatroid

BinaryMatroid::BinaryMatroid(int num_rows,
                             std::vector<std::pair<ElementId, std::uint64_t>> columns)
    : Matroid([&] {
          std::vector<ElementId> ids;
          ids.reserve(columns.size());
          for (auto& [id, col] : columns) ids.push_back(id);
          return ids;
      }()),
      num_rows_(num_rows) {
    if (num_rows < 0 || num_rows > 64) {
        throw Error("binary matroid supports between 0 and 64 rows, got " +
                    std::to_string(num_rows));
    }
    const std::uint64_t mask =
        num_rows == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << num_rows) - 1);
    columns_.resize(columns.size());
    for (auto& [id, col] : columns) {
        if ((col & ~mask) != 0) {
            throw Error("column for element " + id + " has bits beyond row count");
        }
        columns_[index_of(id)] = col;
    }
}

int BinaryMatroid::rank_of(std::span<const int> idx) const {
    // Gaussian elimination over the selected columns.
    std::uint64_t basis[64];
    int r = 0;
    for (int i : idx) {
        std::uint64_t v = columns_[i];
        for (int b = 0; b < r; ++b) {
            std::uint64_t reduced = v ^ basis[b];
            if (reduced < v) v = reduced;
        }
        if (v != 0) {
            basis[r++] = v;
            // Keep the basis sorted descending so reduction by minimum works.
            for (int b = r - 1; b > 0 && basis[b] > basis[b - 1]; --b) {
                std::swap(basis[b], basis[b - 1]);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// GraphRepr

GraphRepr::GraphRepr(std::vector<std::string> vertices,
                     std::vector<std::tuple<ElementId, std::string, std::string>> edges)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        vindex_.emplace(vertices_[i], static_cast<int>(i));
    }
    std::sort(edges.begin(), edges.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    for (auto& [id, u, v] : edges) {
        auto iu = vindex_.find(u);
        auto iv = vindex_.find(v);
        if (iu == vindex_.end() || iv == vindex_.end()) {
            throw FormatError("edge " + id + " references an undeclared vertex");
        }
        if (!eindex_.emplace(id, static_cast<int>(edge_ids_.size())).second) {
            throw FormatError("duplicate edge id: " + id);
        }
        edge_ids_.push_back(id);
        ends_.emplace_back(iu->second, iv->second);
    }
}

int GraphRepr::vertex_index(const std::string& v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw UnknownElementError("unknown vertex: " + v);
    return it->second;
}

int GraphRepr::edge_pos(const ElementId& e) const {
    auto it = eindex_.find(e);
    if (it == eindex_.end()) throw UnknownElementError("unknown edge: " + e);
    return it->second;
}

int GraphRepr::num_components() const {
    return num_components_after_removal({});
}

int GraphRepr::num_components_after_removal(std::span<const int> removed_edge_pos) const {
    std::vector<bool> removed(edge_ids_.size(), false);
    for (int p : removed_edge_pos) removed[p] = true;
    UnionFind uf(num_vertices());
    int comps = num_vertices();
    for (std::size_t i = 0; i < ends_.size(); ++i) {
        if (removed[i]) continue;
        if (uf.unite(ends_[i].first, ends_[i].second)) --comps;
    }
    return comps;
}

// ---------------------------------------------------------------------------
// GraphicMatroid

GraphicMatroid::GraphicMatroid(GraphRepr graph)
    : Matroid(graph.edge_ids()), graph_(std::move(graph)) {}

int GraphicMatroid::rank_of(std::span<const int> idx) const {
    // |X| minus the number of independent cycles: count successful unions.
    UnionFind uf(graph_.num_vertices());
    int r = 0;
    for (int i : idx) {
        auto [u, v] = graph_.endpoints(i);
        if (uf.unite(u, v)) ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// CographicMatroid

CographicMatroid::CographicMatroid(GraphRepr graph)
    : Matroid(graph.edge_ids()), graph_(std::move(graph)) {
    base_components_ = graph_.num_components();
}

int CographicMatroid::rank_of(std::span<const int> idx) const {
    const int removed = static_cast<int>(idx.size());
    const int comps = graph_.num_components_after_removal(idx);
    return removed - (comps - base_components_);
}

// ---------------------------------------------------------------------------
// UniformMatroid

UniformMatroid::UniformMatroid(int r, std::vector<ElementId> elements, std::string prefix)
    : Matroid(std::move(elements)), r_(r), prefix_(std::move(prefix)) {
    if (r_ < 0 || r_ > size()) {
        throw Error("uniform matroid rank must lie in [0, n]");
    }
}

int UniformMatroid::rank_of(std::span<const int> idx) const {
    return std::min<int>(static_cast<int>(idx.size()), r_);
}

// ---------------------------------------------------------------------------
// R10Matroid

namespace {

std::vector<std::pair<ElementId, std::uint64_t>> r10_columns(const std::string& prefix) {
    // [I5 | A] with A the circulant whose first row is 11001:
    // A[i][j] = first[(j - i) mod 5].
    const int first[5] = {1, 1, 0, 0, 1};
    std::vector<std::pair<ElementId, std::uint64_t>> cols;
    for (int j = 0; j < 5; ++j) {
        cols.emplace_back(prefix + std::to_string(j + 1), std::uint64_t{1} << j);
    }
    for (int j = 0; j < 5; ++j) {
        std::uint64_t col = 0;
        for (int i = 0; i < 5; ++i) {
            if (first[((j - i) % 5 + 5) % 5]) col |= std::uint64_t{1} << i;
        }
        cols.emplace_back(prefix + std::to_string(j + 6), col);
    }
    return cols;
}

}  // namespace

R10Matroid::R10Matroid(const std::string& prefix)
    : BinaryMatroid(5, r10_columns(prefix)), prefix_(prefix) {}

// ---------------------------------------------------------------------------
// DualMatroid

DualMatroid::DualMatroid(MatroidPtr base) : Matroid(base->elements()), base_(std::move(base)) {
    base_full_rank_ = base_->full_rank();
}

int DualMatroid::rank_of(std::span<const int> idx) const {
    // r*(X) = |X| + r(E \ X) - r(E); element order matches the base matroid.
    std::vector<int> complement;
    complement.reserve(size() - idx.size());
    std::size_t j = 0;
    for (int i = 0; i < size(); ++i) {
        if (j < idx.size() && idx[j] == i) {
            ++j;
        } else {
            complement.push_back(i);
        }
    }
    return static_cast<int>(idx.size()) + base_->rank_of(complement) - base_full_rank_;
}

// ---------------------------------------------------------------------------
// RestrictedMatroid

RestrictedMatroid::RestrictedMatroid(MatroidPtr base, const ElementSet& subset)
    : Matroid(subset.ids()), base_(std::move(base)) {
    to_base_.reserve(subset.size());
    for (const auto& e : elements()) to_base_.push_back(base_->index_of(e));
}

int RestrictedMatroid::rank_of(std::span<const int> idx) const {
    std::vector<int> mapped;
    mapped.reserve(idx.size());
    for (int i : idx) mapped.push_back(to_base_[i]);
    std::sort(mapped.begin(), mapped.end());
    return base_->rank_of(mapped);
}

// ---------------------------------------------------------------------------
// Factories

MatroidPtr dual(MatroidPtr m) {
    // dual(dual(m)) unwraps to the original representation.
    if (auto d = std::dynamic_pointer_cast<const DualMatroid>(m)) {
        return d->base();
    }
    return std::make_shared<DualMatroid>(std::move(m));
}

MatroidPtr restrict(MatroidPtr m, const ElementSet& x) {
    for (const auto& e : x) m->index_of(e);  // validate labels
    return std::make_shared<RestrictedMatroid>(std::move(m), x);
}

MatroidPtr make_uniform(int r, int n, const std::string& prefix) {
    std::vector<ElementId> ids;
    ids.reserve(n);
    for (int i = 1; i <= n; ++i) ids.push_back(prefix + std::to_string(i));
    return std::make_shared<UniformMatroid>(r, std::move(ids), prefix);
}

MatroidPtr make_graphic(GraphRepr g) {
    return std::make_shared<GraphicMatroid>(std::move(g));
}

MatroidPtr make_cographic(GraphRepr g) {
    return std::make_shared<CographicMatroid>(std::move(g));
}

MatroidPtr make_r10(const std::string& prefix) {
    return std::make_shared<R10Matroid>(prefix);
}

MatroidPtr make_r10_with_parallel(const std::string& prefix,
                                  const std::vector<std::pair<ElementId, ElementId>>& parallel) {
    R10Matroid base(prefix);
    std::vector<std::pair<ElementId, std::uint64_t>> cols;
    for (int i = 0; i < base.size(); ++i) {
        cols.emplace_back(base.element(i), base.column(i));
    }
    for (const auto& [orig, copy] : parallel) {
        cols.emplace_back(copy, base.column(base.index_of(orig)));
    }
    return std::make_shared<BinaryMatroid>(5, std::move(cols));
}

MatroidPtr relabel(const Matroid& m, const std::map<ElementId, ElementId>& renaming) {
    auto rename = [&](const ElementId& e) -> ElementId {
        auto it = renaming.find(e);
        return it == renaming.end() ? e : it->second;
    };
    switch (m.kind()) {
        case MatroidKind::Binary:
        case MatroidKind::R10: {
            const auto& b = dynamic_cast<const BinaryMatroid&>(m);
            std::vector<std::pair<ElementId, std::uint64_t>> cols;
            for (int i = 0; i < b.size(); ++i) {
                cols.emplace_back(rename(b.element(i)), b.column(i));
            }
            return std::make_shared<BinaryMatroid>(b.num_rows(), std::move(cols));
        }
        case MatroidKind::Graphic:
        case MatroidKind::Cographic: {
            const GraphRepr& g = m.kind() == MatroidKind::Graphic
                                     ? dynamic_cast<const GraphicMatroid&>(m).graph()
                                     : dynamic_cast<const CographicMatroid&>(m).graph();
            std::vector<std::tuple<ElementId, std::string, std::string>> edges;
            for (int i = 0; i < g.num_edges(); ++i) {
                auto [u, v] = g.endpoints(i);
                edges.emplace_back(rename(g.edge_ids()[i]), g.vertex(u), g.vertex(v));
            }
            GraphRepr renamed(g.vertices(), std::move(edges));
            if (m.kind() == MatroidKind::Graphic) return make_graphic(std::move(renamed));
            return make_cographic(std::move(renamed));
        }
        case MatroidKind::Uniform: {
            const auto& u = dynamic_cast<const UniformMatroid&>(m);
            std::vector<ElementId> ids;
            for (const auto& e : u.elements()) ids.push_back(rename(e));
            return std::make_shared<UniformMatroid>(u.uniform_rank(), std::move(ids));
        }
        default:
            throw Error("relabel: unsupported matroid kind");
    }
}

}  // namespace matfol
