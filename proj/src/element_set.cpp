#include "matfol/element_set.hpp"

#include <algorithm>
#include <iterator>

#include "matfol/errors.hpp"

namespace matfol {

ElementSet::ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet::ElementSet(std::initializer_list<ElementId> ids)
    : ElementSet(std::vector<ElementId>(ids)) {}

bool ElementSet::contains(const ElementId& e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
}

bool ElementSet::subset_of(const ElementSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

ElementSet ElementSet::unite(const ElementSet& other) const {
    std::vector<ElementId> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    ElementSet r;
    r.ids_ = std::move(out);
    return r;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    std::vector<ElementId> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    ElementSet r;
    r.ids_ = std::move(out);
    return r;
}

ElementSet ElementSet::difference(const ElementSet& other) const {
    std::vector<ElementId> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out));
    ElementSet r;
    r.ids_ = std::move(out);
    return r;
}

ElementSet ElementSet::sym_diff(const ElementSet& other) const {
    std::vector<ElementId> out;
    std::set_symmetric_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                                  other.ids_.end(), std::back_inserter(out));
    ElementSet r;
    r.ids_ = std::move(out);
    return r;
}

ElementSet ElementSet::complement_within(const ElementSet& ground) const {
    if (!subset_of(ground)) {
        throw UnknownElementError("complement_within: set is not contained in the ground set");
    }
    return ground.difference(*this);
}

ElementSet ElementSet::with(const ElementId& e) const {
    return unite(ElementSet{e});
}

ElementSet ElementSet::without(const ElementId& e) const {
    return difference(ElementSet{e});
}

bool ElementSet::size_lex_less(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.ids_ < b.ids_;
}

std::string ElementSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (i) s += ",";
        s += ids_[i];
    }
    s += "}";
    return s;
}

}  // namespace matfol
