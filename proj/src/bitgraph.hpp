#pragma once

// Dense bitset adjacency over a (usually small) vertex subset; the workhorse
// behind the exact clique, colouring and stable-set searches.  Internal to
// the library.

#include <bit>
#include <cstdint>
#include <vector>

#include "rgglab/graph.hpp"

namespace rgglab::graphkit::detail {

struct BitSetView {
    std::uint64_t* w;
    std::size_t words;

    void clear_all() { std::fill(w, w + words, 0ULL); }
    void set(std::size_t i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
    bool empty() const {
        for (std::size_t k = 0; k < words; ++k)
            if (w[k]) return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words; ++k) c += std::popcount(w[k]);
        return c;
    }
    // Lowest set bit, or npos.
    std::size_t first() const {
        for (std::size_t k = 0; k < words; ++k)
            if (w[k]) return (k << 6) + std::countr_zero(w[k]);
        return static_cast<std::size_t>(-1);
    }
    void copy_from(const BitSetView& o) { std::copy(o.w, o.w + words, w); }
    void and_with(const std::uint64_t* o) {
        for (std::size_t k = 0; k < words; ++k) w[k] &= o[k];
    }
    void andnot_with(const std::uint64_t* o) {
        for (std::size_t k = 0; k < words; ++k) w[k] &= ~o[k];
    }
    bool intersects(const std::uint64_t* o) const {
        for (std::size_t k = 0; k < words; ++k)
            if (w[k] & o[k]) return true;
        return false;
    }
};

class BitGraph {
public:
    // Induced subgraph of `g` on `vertices` (global ids, ascending).
    BitGraph(const rgg::GeometricGraph& g, const std::vector<std::uint32_t>& vertices);
    // Plain adjacency-list constructor (non-geometric inputs).
    BitGraph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    // Copy of `src` with local vertex i renamed from src vertex order[i].
    static BitGraph relabelled(const BitGraph& src, const std::vector<std::uint32_t>& order,
                               std::vector<std::uint32_t> new_global);

    std::size_t n() const { return n_; }
    std::size_t words() const { return words_; }
    const std::uint64_t* row(std::size_t i) const { return adj_.data() + i * words_; }
    bool adjacent(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1ULL;
    }
    std::size_t degree(std::size_t i) const {
        std::size_t c = 0;
        const std::uint64_t* r = row(i);
        for (std::size_t k = 0; k < words_; ++k) c += std::popcount(r[k]);
        return c;
    }
    std::uint32_t global_id(std::size_t i) const { return global_[i]; }

    // Scratch bitset allocation helper.
    std::vector<std::uint64_t> make_set() const { return std::vector<std::uint64_t>(words_, 0); }

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint32_t> global_;
};

// Greedy sequential colouring of the candidate set (Tomita-style): fills
// `order` with the candidates sorted by ascending colour and `colours` with
// the matching 1-based colour numbers.  Returns the number of colours.
int colour_sort(const BitGraph& g, const BitSetView& candidates, std::uint32_t* order,
                int* colours, std::vector<std::uint64_t>& scratch);

// Exact maximum clique on a BitGraph via branch and bound with the
// greedy-colouring bound.  `incumbent` is both input (initial bound) and
// output; when a clique strictly larger than the input incumbent exists its
// vertices are placed in `best` (local ids).
void max_clique_search(const BitGraph& g, int& incumbent, std::vector<std::uint32_t>& best);

} // namespace rgglab::graphkit::detail
