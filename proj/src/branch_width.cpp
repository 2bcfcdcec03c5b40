#include "matfol/branch_width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace matfol {

int branch_width_bruteforce(const Matroid& m, int max_elements) {
    const int n = m.size();
    if (n < 2) throw Error("branch_width_bruteforce: need at least 2 elements");
    if (n > max_elements || n > 16) {
        throw SizeBoundTooLargeError("branch_width_bruteforce: " + std::to_string(n) +
                                     " elements exceed the bound " +
                                     std::to_string(max_elements));
    }

    const std::uint32_t full = (1u << n) - 1;
    std::vector<int> rank(full + 1, 0);
    std::vector<int> idx;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        idx.clear();
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) idx.push_back(i);
        }
        rank[mask] = m.rank_of(idx);
    }
    const int rM = rank[full];
    // Width of the tree edge separating S from its complement.
    auto lambda = [&](std::uint32_t s) { return rank[s] + rank[full & ~s] - rM + 1; };

    // best[S]: minimum over rooted binary trees with leaf set S of the
    // maximum lambda over S and all its strict descendants.
    std::vector<int> best(full + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        if (std::popcount(s) == 1) {
            best[s] = lambda(s);
            continue;
        }
        int split_best = INT32_MAX;
        // Enumerate splits once each: the lowest element stays on side a.
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        std::uint32_t sub = rest;
        while (true) {
            const std::uint32_t a = sub | low;
            const std::uint32_t b = s ^ a;
            if (b != 0) split_best = std::min(split_best, std::max(best[a], best[b]));
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        best[s] = std::max(lambda(s), split_best);
    }

    // Unrooted tree = rooting at an arbitrary edge: the two root subtrees
    // partition E, and that edge's lambda is already included in both sides.
    int answer = INT32_MAX;
    if (n == 2) {
        return lambda(1u);
    }
    const std::uint32_t rest = full ^ 1u;
    std::uint32_t sub = rest;
    while (true) {
        const std::uint32_t a = sub | 1u;
        const std::uint32_t b = full ^ a;
        if (b != 0) answer = std::min(answer, std::max(best[a], best[b]));
        if (sub == 0) break;
        sub = (sub - 1) & rest;
    }
    return answer;
}

}  // namespace matfol
