#include "matfol/axioms.hpp"

#include <bit>
#include <cstdint>

namespace matfol {

namespace {

std::string mask_to_string(const Matroid& m, std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < m.size(); ++i) {
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += m.element(i);
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

AxiomReport validate_axioms(const Matroid& m, int max_elements) {
    const int n = m.size();
    if (n > max_elements || n > 25) {
        throw SizeBoundTooLargeError("validate_axioms: ground set of size " + std::to_string(n) +
                                     " exceeds the exhaustive bound " +
                                     std::to_string(max_elements));
    }
    AxiomReport report;
    auto violate = [&](std::string msg) {
        if (report.violations.size() < 50) report.violations.push_back(std::move(msg));
    };

    const std::uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
    std::vector<int> rank(static_cast<std::size_t>(full) + 1, 0);
    std::vector<int> scratch;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        scratch.clear();
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) scratch.push_back(i);
        }
        rank[mask] = m.rank_of(scratch);
        if (mask == full) break;
    }

    // Rank sanity.
    if (rank[0] != 0) violate("rank(∅) = " + std::to_string(rank[0]) + ", expected 0");
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const int pc = std::popcount(mask);
        if (rank[mask] < 0 || rank[mask] > pc) {
            violate("rank(" + mask_to_string(m, mask) + ") = " + std::to_string(rank[mask]) +
                    " outside [0,|X|]");
        }
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) continue;
            const std::uint32_t ext = mask | (1u << i);
            if (rank[ext] < rank[mask] || rank[ext] > rank[mask] + 1) {
                violate("rank not unit-monotone at " + mask_to_string(m, mask) + " + " +
                        m.element(i));
            }
        }
        if (mask == full) break;
    }

    auto independent = [&](std::uint32_t mask) {
        return rank[mask] == std::popcount(mask);
    };

    // Axiom 1.
    if (!independent(0)) violate("axiom 1: empty set is dependent");
    // Axiom 2: hereditary (single deletions suffice by induction).
    for (std::uint32_t mask = 1; mask <= full && full; ++mask) {
        if (!independent(mask)) continue;
        for (int i = 0; i < n; ++i) {
            if ((mask & (1u << i)) && !independent(mask & ~(1u << i))) {
                violate("axiom 2: " + mask_to_string(m, mask) + " independent but " +
                        mask_to_string(m, mask & ~(1u << i)) + " is not");
            }
        }
    }
    // Axiom 3: exchange.
    for (std::uint32_t x = 0; x <= full && full; ++x) {
        if (!independent(x)) continue;
        for (std::uint32_t y = 0; y <= full; ++y) {
            if (!independent(y) || std::popcount(x) >= std::popcount(y)) continue;
            bool extended = false;
            std::uint32_t candidates = y & ~x;
            while (candidates) {
                const int i = std::countr_zero(candidates);
                candidates &= candidates - 1;
                if (independent(x | (1u << i))) {
                    extended = true;
                    break;
                }
            }
            if (!extended) {
                violate("axiom 3: no element of " + mask_to_string(m, y) + " extends " +
                        mask_to_string(m, x));
            }
        }
    }
    // Submodularity over all pairs.
    for (std::uint32_t a = 0; a <= full && full; ++a) {
        for (std::uint32_t b = a; b <= full; ++b) {
            if (rank[a & b] + rank[a | b] > rank[a] + rank[b]) {
                violate("submodularity fails for " + mask_to_string(m, a) + ", " +
                        mask_to_string(m, b));
            }
        }
    }
    return report;
}

}  // namespace matfol
