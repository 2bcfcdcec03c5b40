#include "matfol/delta_sum.hpp"

#include <algorithm>

#include "matfol/gf2.hpp"

namespace matfol {

SumKind sum_kind_for_shared_size(std::size_t shared_size) {
    switch (shared_size) {
        case 0:
            return SumKind::One;
        case 1:
            return SumKind::Two;
        case 3:
            return SumKind::Three;
        default:
            throw SumPreconditionError("shared set must have 0, 1 or 3 elements, got " +
                                       std::to_string(shared_size));
    }
}

std::string check_sum_preconditions(const Matroid& m1, const Matroid& m2, SumKind kind) {
    const ElementSet shared = m1.ground_set().intersect(m2.ground_set());
    const std::size_t expected = kind == SumKind::One ? 0 : kind == SumKind::Two ? 1 : 3;
    if (shared.size() != expected) {
        return "shared set " + shared.to_string() + " has size " +
               std::to_string(shared.size()) + ", expected " + std::to_string(expected);
    }
    const std::size_t sym = m1.ground_set().sym_diff(m2.ground_set()).size();
    if (std::min(m1.ground_set().size(), m2.ground_set().size()) > sym) {
        return "min{|E1|,|E2|} exceeds |E1 △ E2| = " + std::to_string(sym);
    }
    if (kind == SumKind::Two) {
        const ElementId& s = shared.ids().front();
        for (const Matroid* m : {&m1, &m2}) {
            if (m->is_loop(s)) return "shared element " + s + " is a loop in one part";
            if (m->is_coloop(s)) return "shared element " + s + " is a coloop in one part";
        }
    }
    if (kind == SumKind::Three) {
        for (const Matroid* m : {&m1, &m2}) {
            if (!m->is_circuit(shared)) {
                return "shared set " + shared.to_string() + " is not a circuit in both parts";
            }
            // Adopted reading: no cocircuit contained in the shared 3-set.
            for (const auto& a : shared) {
                for (const auto& b : shared) {
                    if (b < a) continue;
                    ElementSet sub = a == b ? ElementSet{a} : ElementSet{a, b};
                    if (m->is_cocircuit(sub)) {
                        return "cocircuit " + sub.to_string() +
                               " is contained in the shared 3-set";
                    }
                }
            }
            if (m->is_cocircuit(shared)) {
                return "the shared 3-set is itself a cocircuit of one part";
            }
        }
    }
    return {};
}

std::shared_ptr<const BinaryMatroid> delta_sum(const Matroid& m1, const Matroid& m2,
                                               SumKind kind) {
    if (std::string msg = check_sum_preconditions(m1, m2, kind); !msg.empty()) {
        throw SumPreconditionError("delta_sum: " + msg);
    }
    const ElementSet union_set = m1.ground_set().unite(m2.ground_set());
    const ElementSet shared = m1.ground_set().intersect(m2.ground_set());
    const ElementSet surviving = m1.ground_set().sym_diff(m2.ground_set());
    const auto& uids = union_set.ids();
    const int w = static_cast<int>(uids.size());

    auto coord = [&](const ElementId& e) {
        return static_cast<int>(
            std::lower_bound(uids.begin(), uids.end(), e) - uids.begin());
    };
    auto to_vec = [&](const ElementSet& s) {
        Gf2Vec v(w);
        for (const auto& e : s) v.set(coord(e), true);
        return v;
    };

    // Span of both cycle spaces inside GF(2)^{E1 ∪ E2}.
    std::vector<Gf2Vec> spanning;
    for (const Matroid* m : {&m1, &m2}) {
        for (const auto& c : cycle_space(*m).basis) spanning.push_back(to_vec(c));
    }

    // Eliminate the shared coordinates: pivot on them first, keep the rows
    // that vanish there.  Those rows span (V1 + V2) ∩ {x_s = 0 ∀ s shared}.
    std::vector<int> shared_coords;
    for (const auto& s : shared) shared_coords.push_back(coord(s));
    std::vector<Gf2Vec> pivots;  // rows used to clear shared coordinates
    std::vector<int> pivot_coord;
    std::vector<Gf2Vec> vanishing;
    for (auto& row : spanning) {
        Gf2Vec v = std::move(row);
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            if (v.get(pivot_coord[p])) v ^= pivots[p];
        }
        int hit = -1;
        for (int sc : shared_coords) {
            if (v.get(sc)) {
                hit = sc;
                break;
            }
        }
        if (hit >= 0) {
            pivots.push_back(std::move(v));
            pivot_coord.push_back(hit);
        } else if (v.any()) {
            vanishing.push_back(std::move(v));
        }
    }

    // Project onto the surviving coordinates.
    const auto& sids = surviving.ids();
    const int sw = static_cast<int>(sids.size());
    std::vector<Gf2Vec> projected;
    for (const auto& v : vanishing) {
        Gf2Vec p(sw);
        for (int j = 0; j < sw; ++j) {
            if (v.get(coord(sids[j]))) p.set(j, true);
        }
        if (p.any()) projected.push_back(std::move(p));
    }
    std::vector<Gf2Vec> cycle_basis = gf2_row_basis(std::move(projected));

    // A representation whose null space is exactly the prescribed cycle
    // space: rows spanning the orthogonal complement.
    std::vector<Gf2Vec> rep_rows = gf2_null_space(sw, cycle_basis);
    const int num_rows = static_cast<int>(rep_rows.size());
    if (num_rows > 64) {
        throw SizeBoundTooLargeError("delta_sum representation needs " +
                                     std::to_string(num_rows) + " rows; 64 supported");
    }
    std::vector<std::pair<ElementId, std::uint64_t>> cols;
    cols.reserve(sw);
    for (int j = 0; j < sw; ++j) {
        std::uint64_t col = 0;
        for (int r = 0; r < num_rows; ++r) {
            if (rep_rows[r].get(j)) col |= std::uint64_t{1} << r;
        }
        cols.emplace_back(sids[j], col);
    }
    return std::make_shared<BinaryMatroid>(num_rows, std::move(cols));
}

}  // namespace matfol
