#include "matfol/circuits.hpp"

#include <algorithm>
#include <limits>

namespace matfol {

namespace {

constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return (a > kInf - b) ? kInf : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kInf / b) return kInf;
    return a * b;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = sat_mul(r, static_cast<std::uint64_t>(n - k + i));
        if (r == kInf) return kInf;
        r /= static_cast<std::uint64_t>(i);
    }
    return r;
}

// Enumerates size-k index combinations from `pool` in lexicographic order,
// merged with the fixed `must` indices.  Returns false when the visitor stops.
bool combinations(const std::vector<int>& pool, int k, const std::vector<int>& must,
                  const std::function<bool(std::span<const int>)>& visit) {
    std::vector<int> pick(k);
    std::vector<int> merged;
    merged.reserve(k + must.size());
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            merged.clear();
            merged.insert(merged.end(), must.begin(), must.end());
            merged.insert(merged.end(), pick.begin(), pick.end());
            std::sort(merged.begin(), merged.end());
            return visit(merged);
        }
        for (int i = start; i <= static_cast<int>(pool.size()) - (k - depth); ++i) {
            pick[depth] = pool[i];
            if (!rec(i + 1, depth + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

}  // namespace

std::uint64_t enumeration_cost(int n, int max_size, int must_contain_size) {
    std::uint64_t total = 0;
    const int free_n = n - must_contain_size;
    for (int s = std::max(1, must_contain_size); s <= max_size; ++s) {
        total = sat_add(total, binom(free_n, s - must_contain_size));
    }
    return total;
}

void for_each_circuit_up_to(const Matroid& m, int max_size, const ElementSet& must_contain,
                            const EnumerationBudget& budget,
                            const std::function<bool(const ElementSet&)>& visit) {
    if (max_size < 0) throw Error("circuits_up_to: max_size must be non-negative");
    const int n = m.size();
    max_size = std::min(max_size, n);
    std::vector<int> must = m.indices_of(must_contain);

    const std::uint64_t cost = enumeration_cost(n, max_size, static_cast<int>(must.size()));
    if (cost > budget.max_subsets) {
        throw SizeBoundTooLargeError(
            "circuit enumeration would examine " +
            (cost == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                               : std::to_string(cost)) +
            " subsets, budget is " + std::to_string(budget.max_subsets));
    }

    std::vector<int> pool;
    pool.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (!std::binary_search(must.begin(), must.end(), i)) pool.push_back(i);
    }

    for (int s = std::max<int>(1, static_cast<int>(must.size())); s <= max_size; ++s) {
        bool keep_going = combinations(
            pool, s - static_cast<int>(must.size()), must, [&](std::span<const int> idx) {
                if (m.is_circuit_idx(idx)) {
                    return visit(m.set_of(idx));
                }
                return true;
            });
        if (!keep_going) return;
    }
}

std::vector<ElementSet> circuits_up_to(const Matroid& m, int max_size,
                                       const ElementSet& must_contain,
                                       const EnumerationBudget& budget) {
    std::vector<ElementSet> out;
    for_each_circuit_up_to(m, max_size, must_contain, budget, [&](const ElementSet& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool is_connected(const Matroid& m, const EnumerationBudget& budget) {
    const int n = m.size();
    if (n <= 1) return true;
    // Mark pairs covered by a common circuit; the enumeration is complete up
    // to size n, so uncovered pairs witness a 1-separation.
    std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
    for_each_circuit_up_to(m, n, {}, budget, [&](const ElementSet& c) {
        std::vector<int> idx = m.indices_of(c);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            for (std::size_t b = a + 1; b < idx.size(); ++b) {
                covered[static_cast<std::size_t>(idx[a]) * n + idx[b]] = true;
            }
        }
        return true;
    });
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!covered[static_cast<std::size_t>(a) * n + b]) return false;
        }
    }
    return true;
}

}  // namespace matfol
