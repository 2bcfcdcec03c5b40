#include "matfol/gf2.hpp"

#include <algorithm>
#include <bit>

namespace matfol {

int Gf2Vec::lowest_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
    return -1;
}

std::vector<int> Gf2Vec::support() const {
    std::vector<int> out;
    for (int i = 0; i < width_; ++i) {
        if (get(i)) out.push_back(i);
    }
    return out;
}

std::vector<Gf2Vec> gf2_row_basis(std::vector<Gf2Vec> rows) {
    std::vector<Gf2Vec> basis;  // each with a unique pivot (lowest bit)
    std::vector<int> pivots;
    for (auto& r : rows) {
        Gf2Vec v = std::move(r);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (v.get(pivots[b])) v ^= basis[b];
        }
        int p = v.lowest_bit();
        if (p < 0) continue;
        // Back-substitute to keep the basis reduced.
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b].get(p)) basis[b] ^= v;
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
    }
    // Sort by pivot for determinism.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<Gf2Vec> sorted;
    sorted.reserve(basis.size());
    for (auto i : order) sorted.push_back(std::move(basis[i]));
    return sorted;
}

int gf2_rank(std::vector<Gf2Vec> rows) {
    return static_cast<int>(gf2_row_basis(std::move(rows)).size());
}

std::vector<Gf2Vec> gf2_null_space(int width, const std::vector<Gf2Vec>& rows) {
    std::vector<Gf2Vec> basis = gf2_row_basis(rows);
    std::vector<int> pivot_of(width, -1);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        pivot_of[basis[b].lowest_bit()] = static_cast<int>(b);
    }
    std::vector<Gf2Vec> null_basis;
    for (int j = 0; j < width; ++j) {
        if (pivot_of[j] >= 0) continue;  // pivot column
        Gf2Vec v(width);
        v.set(j, true);
        // For each basis row containing column j, set the pivot coordinate so
        // the row evaluates to zero on v.
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b].get(j)) v.set(basis[b].lowest_bit(), true);
        }
        null_basis.push_back(std::move(v));
    }
    return null_basis;
}

}  // namespace matfol
