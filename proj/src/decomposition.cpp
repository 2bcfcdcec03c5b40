#include "matfol/decomposition.hpp"

#include <algorithm>
#include <set>

namespace matfol {

DecompositionTree::DecompositionTree(std::string root, std::vector<DecompositionNode> nodes)
    : root_(std::move(root)) {
    for (auto& n : nodes) {
        std::string id = n.id;
        if (!nodes_.emplace(id, std::move(n)).second) {
            throw FormatError("duplicate decomposition node id: " + id);
        }
    }
    if (!nodes_.count(root_)) {
        throw FormatError("decomposition root '" + root_ + "' is not a node");
    }
}

const DecompositionNode& DecompositionTree::node(const std::string& id) const {
    auto it = nodes_.find(id);
    if (it == nodes_.end()) throw FormatError("unknown decomposition node: " + id);
    return it->second;
}

ElementSet DecompositionTree::surviving_elements() const {
    ElementSet shared;
    ElementSet all;
    for (const auto& [id, n] : nodes_) {
        all = all.unite(n.matroid->ground_set());
        for (const auto& [cid, special] : n.children) shared = shared.unite(special);
    }
    return all.difference(shared);
}

std::optional<std::string> DecompositionTree::node_of_element(const ElementId& e) const {
    for (const auto& [id, n] : nodes_) {
        if (!n.matroid->ground_set().contains(e)) continue;
        bool in_special = false;
        for (const auto& [cid, special] : n.children) {
            if (special.contains(e)) in_special = true;
        }
        if (!in_special && !(n.parent && n.parent_set.contains(e))) return id;
    }
    return std::nullopt;
}

bool DecompositionTree::is_shared_element(const ElementId& e) const {
    for (const auto& [id, n] : nodes_) {
        for (const auto& [cid, special] : n.children) {
            if (special.contains(e)) return true;
        }
    }
    return false;
}

namespace {

// Whether the edge set is exactly the cut around some vertex of g.
bool is_vertex_star(const GraphRepr& g, const ElementSet& edges) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        ElementSet star;
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [a, b] = g.endpoints(e);
            if (a == b) continue;  // loops are not in any cut
            if (a == v || b == v) star = star.with(g.edge_ids()[e]);
        }
        if (star == edges) return true;
    }
    return false;
}

}  // namespace

TreeReport validate_tree(const DecompositionTree& t) {
    TreeReport report;
    auto violate = [&](const std::string& msg) { report.violations.push_back(msg); };

    // Tree shape: parent pointers and children lists must agree, every node
    // reachable from the root exactly once.
    std::set<std::string> reached;
    std::vector<std::string> stack{t.root()};
    while (!stack.empty()) {
        std::string id = stack.back();
        stack.pop_back();
        if (!reached.insert(id).second) {
            violate("node '" + id + "' reached twice (cycle in tree)");
            return report;
        }
        const auto& n = t.node(id);
        for (const auto& [cid, special] : n.children) {
            if (!t.has_node(cid)) {
                violate("node '" + id + "' lists unknown child '" + cid + "'");
                continue;
            }
            const auto& c = t.node(cid);
            if (!c.parent || *c.parent != id) {
                violate("child '" + cid + "' does not point back to parent '" + id + "'");
            }
            stack.push_back(cid);
        }
    }
    for (const auto& [id, n] : t.nodes()) {
        if (!reached.count(id)) violate("node '" + id + "' unreachable from the root");
    }
    if (t.node(t.root()).parent) violate("root node has a parent pointer");
    if (!report.violations.empty()) return report;

    // Label discipline: every label lives in at most two nodes, and then
    // exactly in a parent-child pair via the declared shared set.
    std::map<ElementId, std::vector<std::string>> where;
    for (const auto& [id, n] : t.nodes()) {
        for (const auto& e : n.matroid->ground_set()) where[e].push_back(id);
    }
    for (const auto& [e, ids] : where) {
        if (ids.size() == 1) continue;
        if (ids.size() > 2) {
            violate("element '" + e + "' appears in " + std::to_string(ids.size()) + " nodes");
            continue;
        }
        const auto& a = t.node(ids[0]);
        const auto& b = t.node(ids[1]);
        const DecompositionNode* parent = nullptr;
        const DecompositionNode* child = nullptr;
        if (a.parent && *a.parent == b.id) {
            parent = &b;
            child = &a;
        } else if (b.parent && *b.parent == a.id) {
            parent = &a;
            child = &b;
        } else {
            violate("element '" + e + "' shared by non-adjacent nodes '" + ids[0] + "', '" +
                    ids[1] + "'");
            continue;
        }
        bool declared = false;
        for (const auto& [cid, special] : parent->children) {
            if (cid == child->id && special.contains(e)) declared = true;
        }
        if (!declared || !child->parent_set.contains(e)) {
            violate("element '" + e + "' shared between '" + parent->id + "' and '" +
                    child->id + "' outside the declared shared sets");
        }
    }

    for (const auto& [id, n] : t.nodes()) {
        const Matroid& m = *n.matroid;
        // Parent set: size 1 or 3, contained in this node's ground set, and
        // label-identical with the parent's special set.
        if (n.parent_set.size() != 1 && n.parent_set.size() != 3) {
            violate("node '" + id + "': parent set size must be 1 or 3");
        }
        if (!n.parent_set.subset_of(m.ground_set())) {
            violate("node '" + id + "': parent set not contained in the node's matroid");
        }
        if (n.parent) {
            const auto& p = t.node(*n.parent);
            bool matched = false;
            for (const auto& [cid, special] : p.children) {
                if (cid == id && special == n.parent_set) matched = true;
            }
            if (!matched) {
                violate("node '" + id + "': parent set does not match the special set in '" +
                        *n.parent + "'");
            }
        } else {
            // Root: the single designated element must survive composition.
            if (n.parent_set.size() != 1) {
                violate("root parent set must hold exactly one element");
            } else if (t.is_shared_element(n.parent_set.ids().front())) {
                violate("root designated element '" + n.parent_set.ids().front() +
                        "' is a shared element");
            }
        }
        // Special sets: pairwise disjoint within the node.
        ElementSet seen;
        for (const auto& [cid, special] : n.children) {
            if (!seen.intersect(special).empty()) {
                violate("node '" + id + "': special sets are not pairwise disjoint");
            }
            seen = seen.unite(special);
            if (!special.subset_of(m.ground_set())) {
                violate("node '" + id + "': special set for '" + cid +
                        "' not contained in the node's matroid");
                continue;
            }
            if (special.size() != 1 && special.size() != 3) {
                violate("node '" + id + "': special set for '" + cid + "' has size " +
                        std::to_string(special.size()));
                continue;
            }
            if (!t.has_node(cid)) continue;
            const Matroid& cm = *t.node(cid).matroid;
            if (special.size() == 1) {
                const ElementId& s = special.ids().front();
                for (const Matroid* part : {&m, &cm}) {
                    if (part->ground_set().contains(s)) {
                        if (part->is_loop(s)) {
                            violate("2-sum element '" + s + "' is a loop in a part");
                        } else if (part->is_coloop(s)) {
                            violate("2-sum element '" + s + "' is a coloop in a part");
                        }
                    }
                }
            } else {
                for (const Matroid* part : {&m, &cm}) {
                    if (!special.subset_of(part->ground_set())) continue;
                    if (!part->is_circuit(special)) {
                        violate("3-sum set " + special.to_string() +
                                " is not a circuit in both parts (node '" + id + "' / '" + cid +
                                "')");
                    }
                    // Adopted reading of the paper's condition: no cocircuit
                    // contained in the 3-element shared set.
                    for (const auto& a : special) {
                        for (const auto& b : special) {
                            if (b < a) continue;
                            ElementSet sub = a == b ? ElementSet{a} : ElementSet{a, b};
                            if (part->is_cocircuit(sub)) {
                                violate("3-sum set " + special.to_string() +
                                        " contains the cocircuit " + sub.to_string() +
                                        " (checking cocircuits contained in the set)");
                            }
                        }
                    }
                    if (part->is_cocircuit(special)) {
                        violate("3-sum set " + special.to_string() +
                                " is itself a cocircuit of a part");
                    }
                }
                // Simplicity for cographic pieces: the 3-set must be the cut
                // around a vertex of the stored graph.
                if (auto cg = dynamic_cast<const CographicMatroid*>(&m)) {
                    if (!is_vertex_star(cg->graph(), special)) {
                        violate("cographic node '" + id + "': special set " +
                                special.to_string() + " is not a cut around a vertex (not simple)");
                    }
                }
            }
        }
    }
    return report;
}

namespace {

MatroidPtr compose_subtree(const DecompositionTree& t, const std::string& id) {
    const auto& n = t.node(id);
    MatroidPtr acc = n.matroid;
    for (const auto& [cid, special] : n.children) {
        MatroidPtr child = compose_subtree(t, cid);
        const ElementSet shared = acc->ground_set().intersect(child->ground_set());
        if (shared != special) {
            throw SumPreconditionError("node '" + id + "': actual shared set " +
                                       shared.to_string() + " differs from declared " +
                                       special.to_string());
        }
        try {
            acc = delta_sum(*acc, *child, sum_kind_for_shared_size(special.size()));
        } catch (const SumPreconditionError& e) {
            throw SumPreconditionError(std::string(e.what()) + " [at node '" + id +
                                       "', child '" + cid + "']");
        }
    }
    return acc;
}

}  // namespace

MatroidPtr compose_tree(const DecompositionTree& t, const std::optional<std::string>& up_to) {
    return compose_subtree(t, up_to.value_or(t.root()));
}

DecompositionTree attach_f2_leaf(const DecompositionTree& t, const ElementId& f2) {
    const auto& root = t.node(t.root());
    if (!root.parent && root.parent_set.contains(f2)) {
        throw ElementSharedError("attach_f2_leaf: '" + f2 +
                                 "' is the root's designated element");
    }
    if (t.is_shared_element(f2)) {
        throw ElementSharedError("attach_f2_leaf: '" + f2 + "' is a shared element");
    }
    auto host = t.node_of_element(f2);
    if (!host) {
        throw UnknownElementError("attach_f2_leaf: element '" + f2 + "' not found");
    }

    // Fresh labels for the connector and the new node id.
    ElementSet all_labels;
    std::set<std::string> all_ids;
    for (const auto& [id, n] : t.nodes()) {
        all_labels = all_labels.unite(n.matroid->ground_set());
        all_ids.insert(id);
    }
    std::string connector = f2 + "#conn";
    for (int k = 0; all_labels.contains(connector); ++k) {
        connector = f2 + "#conn" + std::to_string(k);
    }
    std::string leaf_id = *host + "#f2leaf";
    for (int k = 0; all_ids.count(leaf_id); ++k) {
        leaf_id = *host + "#f2leaf" + std::to_string(k);
    }

    std::vector<DecompositionNode> nodes;
    for (const auto& [id, n] : t.nodes()) {
        DecompositionNode copy = n;
        if (id == *host) {
            copy.matroid = relabel(*n.matroid, {{f2, connector}});
            copy.children.emplace_back(leaf_id, ElementSet{connector});
        }
        nodes.push_back(std::move(copy));
    }
    DecompositionNode leaf;
    leaf.id = leaf_id;
    leaf.parent = *host;
    leaf.parent_set = ElementSet{connector};
    leaf.matroid = std::make_shared<BinaryMatroid>(
        1, std::vector<std::pair<ElementId, std::uint64_t>>{{connector, 1}, {f2, 1}});
    nodes.push_back(std::move(leaf));
    return DecompositionTree(t.root(), std::move(nodes));
}

}  // namespace matfol
