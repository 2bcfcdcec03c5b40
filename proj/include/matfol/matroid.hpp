#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matfol/element_set.hpp"
#include "matfol/errors.hpp"

namespace matfol {

enum class MatroidKind { Binary, Graphic, Cographic, Uniform, R10, Dual, Restricted };

// A matroid given by its ground set and a rank oracle.  Subset queries use
// sorted index lists into the element array; the ElementSet overloads
// validate labels and translate.  Instances are immutable after
// construction, so all queries are safe for concurrent readers.
class Matroid {
  public:
    virtual ~Matroid() = default;

    const std::vector<ElementId>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const ElementSet& ground_set() const { return ground_; }
    const ElementId& element(int idx) const { return elements_[idx]; }
    // Throws UnknownElementError for labels outside the ground set.
    int index_of(const ElementId& e) const;
    std::optional<int> find_index(const ElementId& e) const;

    // Rank of the subset given by strictly increasing element indices.
    virtual int rank_of(std::span<const int> idx) const = 0;
    virtual MatroidKind kind() const = 0;

    int rank(const ElementSet& x) const;
    int full_rank() const;
    bool is_independent(const ElementSet& x) const;
    // Dependent with every single-element deletion independent.
    bool is_circuit(const ElementSet& x) const;
    bool is_loop(const ElementId& e) const;
    bool is_coloop(const ElementId& e) const;
    bool is_cocircuit(const ElementSet& x) const;

    bool is_independent_idx(std::span<const int> idx) const;
    bool is_circuit_idx(std::span<const int> idx) const;

    std::vector<int> indices_of(const ElementSet& x) const;
    ElementSet set_of(std::span<const int> idx) const;

  protected:
    explicit Matroid(std::vector<ElementId> elements);

  private:
    std::vector<ElementId> elements_;  // sorted, pairwise distinct
    ElementSet ground_;
    std::unordered_map<ElementId, int> index_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// GF(2) column matroid.  Columns are bit-packed, at most 64 rows.
class BinaryMatroid : public Matroid {
  public:
    BinaryMatroid(int num_rows, std::vector<std::pair<ElementId, std::uint64_t>> columns);

    int num_rows() const { return num_rows_; }
    std::uint64_t column(int idx) const { return columns_[idx]; }

    int rank_of(std::span<const int> idx) const override;
    MatroidKind kind() const override { return MatroidKind::Binary; }

  private:
    int num_rows_;
    std::vector<std::uint64_t> columns_;  // aligned with elements()
};

// Multigraph with labeled edges; loops and parallel edges allowed.
class GraphRepr {
  public:
    GraphRepr(std::vector<std::string> vertices,
              std::vector<std::tuple<ElementId, std::string, std::string>> edges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edge_ids_.size()); }
    const std::vector<ElementId>& edge_ids() const { return edge_ids_; }
    // Endpoints as vertex indices, for the edge at the given position in edge_ids().
    std::pair<int, int> endpoints(int edge_pos) const { return ends_[edge_pos]; }
    const std::string& vertex(int v) const { return vertices_[v]; }
    int vertex_index(const std::string& v) const;
    int edge_pos(const ElementId& e) const;

    int num_components() const;
    // Components of the graph after deleting the given edge positions.
    int num_components_after_removal(std::span<const int> removed_edge_pos) const;

  private:
    std::vector<std::string> vertices_;  // sorted
    std::unordered_map<std::string, int> vindex_;
    std::vector<ElementId> edge_ids_;  // sorted
    std::vector<std::pair<int, int>> ends_;
    std::unordered_map<ElementId, int> eindex_;
};

// Cycle matroid M(G): independent sets are the acyclic edge sets.
class GraphicMatroid : public Matroid {
  public:
    explicit GraphicMatroid(GraphRepr graph);
    const GraphRepr& graph() const { return graph_; }
    int rank_of(std::span<const int> idx) const override;
    MatroidKind kind() const override { return MatroidKind::Graphic; }

  private:
    GraphRepr graph_;
};

// Bond matroid M*(G): rank(X) = |X| - (c(G - X) - c(G)).
class CographicMatroid : public Matroid {
  public:
    explicit CographicMatroid(GraphRepr graph);
    const GraphRepr& graph() const { return graph_; }
    int rank_of(std::span<const int> idx) const override;
    MatroidKind kind() const override { return MatroidKind::Cographic; }

  private:
    GraphRepr graph_;
    int base_components_;
};

class UniformMatroid : public Matroid {
  public:
    UniformMatroid(int r, std::vector<ElementId> elements, std::string prefix = "");
    int uniform_rank() const { return r_; }
    const std::string& prefix() const { return prefix_; }
    int rank_of(std::span<const int> idx) const override;
    MatroidKind kind() const override { return MatroidKind::Uniform; }

  private:
    int r_;
    std::string prefix_;  // empty when elements are not prefix-generated
};

// R10 in the standard form [I5 | A], A the circulant with first row 11001.
class R10Matroid : public BinaryMatroid {
  public:
    explicit R10Matroid(const std::string& prefix = "e");
    const std::string& prefix() const { return prefix_; }
    MatroidKind kind() const override { return MatroidKind::R10; }

  private:
    std::string prefix_;
};

// Dual via the rank identity r*(X) = |X| + r(E \ X) - r(E).
class DualMatroid : public Matroid {
  public:
    explicit DualMatroid(MatroidPtr base);
    const MatroidPtr& base() const { return base_; }
    int rank_of(std::span<const int> idx) const override;
    MatroidKind kind() const override { return MatroidKind::Dual; }

  private:
    MatroidPtr base_;
    int base_full_rank_;
};

// Restriction to a subset of the ground set.
class RestrictedMatroid : public Matroid {
  public:
    RestrictedMatroid(MatroidPtr base, const ElementSet& subset);
    const MatroidPtr& base() const { return base_; }
    int rank_of(std::span<const int> idx) const override;
    MatroidKind kind() const override { return MatroidKind::Restricted; }

  private:
    MatroidPtr base_;
    std::vector<int> to_base_;  // restricted index -> base index
};

MatroidPtr dual(MatroidPtr m);
MatroidPtr restrict(MatroidPtr m, const ElementSet& x);

// Convenience constructors.
MatroidPtr make_uniform(int r, int n, const std::string& prefix = "e");
MatroidPtr make_graphic(GraphRepr g);
MatroidPtr make_cographic(GraphRepr g);
MatroidPtr make_r10(const std::string& prefix = "e");
// Copies of R10 columns plus duplicates: each entry of `parallel` names an
// original element and the label of its new parallel copy.
MatroidPtr make_r10_with_parallel(const std::string& prefix,
                                  const std::vector<std::pair<ElementId, ElementId>>& parallel);

// Renames ground-set elements.  Labels missing from the map are kept.  The
// result is representation-equivalent; R10/uniform inputs decay to their
// underlying representation when renaming breaks the generated labeling.
MatroidPtr relabel(const Matroid& m, const std::map<ElementId, ElementId>& renaming);

}  // namespace matfol
