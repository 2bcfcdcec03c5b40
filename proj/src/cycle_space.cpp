#include "matfol/cycle_space.hpp"

#include <algorithm>

#include "matfol/gf2.hpp"

namespace matfol {

namespace {

// Greedy lexicographic base plus, for every non-base element, the set of
// base elements in its fundamental circuit.
struct FundamentalData {
    std::vector<int> base;                      // indices forming a base, ascending
    std::vector<int> base_slot;                 // element idx -> position in base, or -1
    std::vector<std::vector<int>> base_part;    // for non-base idx: base elements of C(e,B)
};

FundamentalData fundamental_circuits(const Matroid& m) {
    const int n = m.size();
    FundamentalData fd;
    fd.base_slot.assign(n, -1);
    std::vector<int> current;
    for (int i = 0; i < n; ++i) {
        current.push_back(i);
        if (m.rank_of(current) == static_cast<int>(current.size())) {
            fd.base_slot[i] = static_cast<int>(fd.base.size());
            fd.base.push_back(i);
        } else {
            current.pop_back();
        }
    }
    fd.base_part.assign(n, {});
    std::vector<int> probe;
    for (int e = 0; e < n; ++e) {
        if (fd.base_slot[e] >= 0) continue;
        // b lies in the unique circuit of B + e iff (B + e) \ {b} stays dependent-free.
        const int target = static_cast<int>(fd.base.size());
        for (int b : fd.base) {
            probe.clear();
            for (int x : fd.base) {
                if (x != b) probe.push_back(x);
            }
            probe.push_back(e);
            std::sort(probe.begin(), probe.end());
            if (m.rank_of(probe) == target) fd.base_part[e].push_back(b);
        }
    }
    return fd;
}

}  // namespace

bool CycleSpace::contains(const ElementSet& x) const {
    if (!x.subset_of(ground)) return false;
    std::vector<Gf2Vec> rows;
    auto to_vec = [&](const ElementSet& s) {
        Gf2Vec v(static_cast<int>(ground.size()));
        const auto& ids = ground.ids();
        for (const auto& e : s) {
            auto it = std::lower_bound(ids.begin(), ids.end(), e);
            v.set(static_cast<int>(it - ids.begin()), true);
        }
        return v;
    };
    for (const auto& b : basis) rows.push_back(to_vec(b));
    const int base_rank = gf2_rank(rows);
    rows.push_back(to_vec(x));
    return gf2_rank(rows) == base_rank;
}

std::vector<ElementSet> CycleSpace::enumerate() const {
    std::vector<ElementSet> out;
    const int dim = dimension();
    if (dim > 24) {
        throw SizeBoundTooLargeError("cycle space enumeration over dimension " +
                                     std::to_string(dim));
    }
    out.reserve(std::size_t{1} << dim);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << dim); ++mask) {
        ElementSet acc;
        for (int b = 0; b < dim; ++b) {
            if (mask & (1u << b)) acc = acc.sym_diff(basis[b]);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

CycleSpace cycle_space(const Matroid& m) {
    FundamentalData fd = fundamental_circuits(m);
    CycleSpace cs;
    cs.ground = m.ground_set();
    for (int e = 0; e < m.size(); ++e) {
        if (fd.base_slot[e] >= 0) continue;
        std::vector<int> idx = fd.base_part[e];
        idx.push_back(e);
        std::sort(idx.begin(), idx.end());
        cs.basis.push_back(m.set_of(idx));
    }
    return cs;
}

std::shared_ptr<const BinaryMatroid> as_binary(const Matroid& m) {
    if (auto b = dynamic_cast<const BinaryMatroid*>(&m)) {
        // Already in matrix form; share the column data.
        std::vector<std::pair<ElementId, std::uint64_t>> cols;
        for (int i = 0; i < b->size(); ++i) cols.emplace_back(b->element(i), b->column(i));
        return std::make_shared<BinaryMatroid>(b->num_rows(), std::move(cols));
    }
    FundamentalData fd = fundamental_circuits(m);
    const int r = static_cast<int>(fd.base.size());
    if (r > 64) {
        throw SizeBoundTooLargeError("binary representation needs " + std::to_string(r) +
                                     " rows; 64 supported");
    }
    std::vector<std::pair<ElementId, std::uint64_t>> cols;
    for (int e = 0; e < m.size(); ++e) {
        std::uint64_t col = 0;
        if (fd.base_slot[e] >= 0) {
            col = std::uint64_t{1} << fd.base_slot[e];
        } else {
            for (int b : fd.base_part[e]) col |= std::uint64_t{1} << fd.base_slot[b];
        }
        cols.emplace_back(m.element(e), col);
    }
    return std::make_shared<BinaryMatroid>(r, std::move(cols));
}

}  // namespace matfol
