#include "bitgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgglab::graphkit::detail {

BitGraph::BitGraph(const rgg::GeometricGraph& g, const std::vector<std::uint32_t>& vertices) {
    n_ = vertices.size();
    words_ = (n_ + 63) / 64;
    adj_.assign(n_ * words_, 0);
    global_ = vertices;
    // vertices ascending -> binary search for local ids
    for (std::size_t li = 0; li < n_; ++li) {
        const std::uint32_t gi = vertices[li];
        for (std::uint32_t gj : g.neighbors_of(gi)) {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), gj);
            if (it != vertices.end() && *it == gj) {
                const std::size_t lj = static_cast<std::size_t>(it - vertices.begin());
                adj_[li * words_ + (lj >> 6)] |= 1ULL << (lj & 63);
            }
        }
    }
}

BitGraph::BitGraph(std::size_t n,
                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    n_ = n;
    words_ = (n_ + 63) / 64;
    adj_.assign(n_ * words_, 0);
    global_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) global_[i] = static_cast<std::uint32_t>(i);
    for (auto [a, b] : edges) {
        if (a >= n_ || b >= n_ || a == b)
            throw std::invalid_argument("edge endpoint out of range");
        adj_[a * words_ + (b >> 6)] |= 1ULL << (b & 63);
        adj_[b * words_ + (a >> 6)] |= 1ULL << (a & 63);
    }
}

BitGraph BitGraph::relabelled(const BitGraph& src, const std::vector<std::uint32_t>& order,
                              std::vector<std::uint32_t> new_global) {
    BitGraph out(src.n_, {});
    out.global_ = std::move(new_global);
    std::vector<std::uint32_t> inverse(src.n_);
    for (std::size_t i = 0; i < src.n_; ++i) inverse[order[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < src.n_; ++i) {
        const std::uint64_t* row = src.row(order[i]);
        for (std::size_t k = 0; k < src.words_; ++k) {
            std::uint64_t word = row[k];
            while (word) {
                const std::size_t j = (k << 6) + std::countr_zero(word);
                word &= word - 1;
                const std::size_t jj = inverse[j];
                out.adj_[i * out.words_ + (jj >> 6)] |= 1ULL << (jj & 63);
            }
        }
    }
    return out;
}

int colour_sort(const BitGraph& g, const BitSetView& candidates, std::uint32_t* order,
                int* colours, std::vector<std::uint64_t>& scratch) {
    const std::size_t words = g.words();
    scratch.resize(2 * words);
    BitSetView uncoloured{scratch.data(), words};
    BitSetView klass{scratch.data() + words, words};
    uncoloured.copy_from(candidates);

    int colour = 0;
    std::size_t m = 0;
    while (!uncoloured.empty()) {
        ++colour;
        klass.copy_from(uncoloured);
        while (true) {
            const std::size_t v = klass.first();
            if (v == static_cast<std::size_t>(-1)) break;
            klass.reset(v);
            klass.andnot_with(g.row(v));
            uncoloured.reset(v);
            order[m] = static_cast<std::uint32_t>(v);
            colours[m] = colour;
            ++m;
        }
    }
    return colour;
}

namespace {

struct CliqueSearch {
    const BitGraph& g;
    int incumbent;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> current;
    std::vector<std::uint64_t> cand_pool;   // per-depth candidate sets
    std::vector<std::uint32_t> order_pool;  // per-depth colour order
    std::vector<int> colour_pool;
    std::vector<std::uint64_t> scratch;

    explicit CliqueSearch(const BitGraph& graph, int inc) : g(graph), incumbent(inc) {
        const std::size_t depth_cap = g.n() + 1;
        cand_pool.assign(depth_cap * g.words(), 0);
        order_pool.assign(depth_cap * g.n(), 0);
        colour_pool.assign(depth_cap * g.n(), 0);
    }

    void expand(std::size_t depth) {
        BitSetView P{cand_pool.data() + depth * g.words(), g.words()};
        if (P.empty()) {
            if (static_cast<int>(current.size()) > incumbent) {
                incumbent = static_cast<int>(current.size());
                best = current;
            }
            return;
        }
        std::uint32_t* order = order_pool.data() + depth * g.n();
        int* colours = colour_pool.data() + depth * g.n();
        const std::size_t m = P.count();
        colour_sort(g, P, order, colours, scratch);

        for (std::size_t idx = m; idx-- > 0;) {
            const std::uint32_t v = order[idx];
            if (static_cast<int>(current.size()) + colours[idx] <= incumbent) return;
            BitSetView next{cand_pool.data() + (depth + 1) * g.words(), g.words()};
            next.copy_from(P);
            next.and_with(g.row(v));
            current.push_back(v);
            expand(depth + 1);
            current.pop_back();
            P.reset(v);
        }
    }
};

} // namespace

void max_clique_search(const BitGraph& g, int& incumbent, std::vector<std::uint32_t>& best) {
    if (g.n() == 0) return;
    CliqueSearch search(g, incumbent);
    BitSetView root{search.cand_pool.data(), g.words()};
    for (std::size_t i = 0; i < g.n(); ++i) root.set(i);
    search.expand(0);
    if (search.incumbent > incumbent) {
        incumbent = search.incumbent;
        best = search.best;
    }
}

} // namespace rgglab::graphkit::detail
