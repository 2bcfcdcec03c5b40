#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matfol/delta_sum.hpp"
#include "matfol/matroid.hpp"

namespace matfol {

// One node of a rooted decomposition tree: a piece matroid, the set shared
// with the parent (size 1 or 3; the root holds the designated element f1),
// and one shared "special set" per child.
struct DecompositionNode {
    std::string id;
    MatroidPtr matroid;
    std::optional<std::string> parent;
    ElementSet parent_set;
    std::vector<std::pair<std::string, ElementSet>> children;  // (child id, special set)
};

class DecompositionTree {
  public:
    DecompositionTree(std::string root, std::vector<DecompositionNode> nodes);

    const std::string& root() const { return root_; }
    const DecompositionNode& node(const std::string& id) const;
    bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }
    const std::map<std::string, DecompositionNode>& nodes() const { return nodes_; }

    // Non-shared elements of the whole tree (= ground set after composition).
    ElementSet surviving_elements() const;
    // The node whose matroid holds `e` as a non-shared element, if any.
    std::optional<std::string> node_of_element(const ElementId& e) const;
    bool is_shared_element(const ElementId& e) const;

  private:
    std::string root_;
    std::map<std::string, DecompositionNode> nodes_;
};

struct TreeReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Structural validation: tree shape, shared-label matching, sum side
// conditions on the pieces, disjointness of each node's special sets, and
// simplicity (vertex-cut form) of cographic 3-element special sets.
TreeReport validate_tree(const DecompositionTree& t);

// Bottom-up fold of delta_sum over the special sets.  With `up_to` set,
// returns the partial composition N_i for that subtree (its parent set
// survives); by default returns the full matroid.
MatroidPtr compose_tree(const DecompositionTree& t,
                        const std::optional<std::string>& up_to = std::nullopt);

// Moves f2 into a fresh U_{1,2} leaf joined by a 2-sum, preserving the
// composed matroid.  Throws ElementSharedError when f2 is a shared element
// (or the root's designated element), UnknownElementError when absent.
DecompositionTree attach_f2_leaf(const DecompositionTree& t, const ElementId& f2);

}  // namespace matfol
