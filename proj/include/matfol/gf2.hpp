#pragma once

#include <cstdint>
#include <vector>

namespace matfol {

// Fixed-width GF(2) vector backed by 64-bit words.
class Gf2Vec {
  public:
    Gf2Vec() = default;
    explicit Gf2Vec(int width) : width_(width), words_((width + 63) / 64, 0) {}

    int width() const { return width_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    Gf2Vec& operator^=(const Gf2Vec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    // Index of the lowest set bit, or -1.
    int lowest_bit() const;
    bool operator==(const Gf2Vec&) const = default;

    std::vector<int> support() const;

  private:
    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

// Reduced row-echelon basis of the span of `rows` (pivots on lowest bits).
std::vector<Gf2Vec> gf2_row_basis(std::vector<Gf2Vec> rows);

int gf2_rank(std::vector<Gf2Vec> rows);

// Basis of { x : row · x = 0 for every row } in GF(2)^width.
std::vector<Gf2Vec> gf2_null_space(int width, const std::vector<Gf2Vec>& rows);

}  // namespace matfol
