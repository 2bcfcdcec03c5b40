#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace matfol {

// Opaque element label, unique within one matroid's ground set.
using ElementId = std::string;

// Immutable finite set of element labels, kept sorted.  The universal
// currency of every rank/circuit query in the library.
class ElementSet {
  public:
    ElementSet() = default;
    explicit ElementSet(std::vector<ElementId> ids);
    ElementSet(std::initializer_list<ElementId> ids);

    const std::vector<ElementId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    bool contains(const ElementId& e) const;
    bool subset_of(const ElementSet& other) const;

    ElementSet unite(const ElementSet& other) const;
    ElementSet intersect(const ElementSet& other) const;
    ElementSet difference(const ElementSet& other) const;
    ElementSet sym_diff(const ElementSet& other) const;
    // ground \ this; throws UnknownElementError unless this is a subset of ground.
    ElementSet complement_within(const ElementSet& ground) const;

    ElementSet with(const ElementId& e) const;
    ElementSet without(const ElementId& e) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const ElementSet&) const = default;
    // Size first, then lexicographic on the sorted label sequence.  This is
    // the enumeration order used for circuits throughout the library.
    static bool size_lex_less(const ElementSet& a, const ElementSet& b);
    bool operator<(const ElementSet& other) const { return ids_ < other.ids_; }

    std::string to_string() const;

  private:
    std::vector<ElementId> ids_;
};

}  // namespace matfol
