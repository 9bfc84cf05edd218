#include "rgglab/graphkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bitgraph.hpp"
#include "rgglab/scan.hpp"
#include "rgglab/spatial_grid.hpp"

namespace rgglab::graphkit {

bool is_proper_colouring(const rgg::GeometricGraph& g, const ColouringResult& c) {
    if (c.colour.size() != g.num_vertices()) return false;
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        if (c.colour[i] < 0) return false;
        for (std::uint32_t j : g.neighbors_of(i))
            if (c.colour[i] == c.colour[j]) return false;
    }
    std::vector<int> used(c.colour.begin(), c.colour.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return static_cast<int>(used.size()) == c.palette ||
           (g.num_vertices() == 0 && c.palette == 0);
}

namespace {

// Greedy colouring along a fixed vertex order, smallest available colour.
ColouringResult greedy_colouring(const rgg::GeometricGraph& g,
                                 const std::vector<std::uint32_t>& order) {
    const std::size_t n = g.num_vertices();
    ColouringResult res;
    res.method = ColouringMethod::Greedy;
    res.colour.assign(n, -1);
    std::vector<int> mark; // colour -> last vertex that marked it
    int palette = 0;
    for (std::uint32_t v : order) {
        for (std::uint32_t w : g.neighbors_of(v)) {
            const int c = res.colour[w];
            if (c >= 0) mark[c] = static_cast<int>(v);
        }
        int c = 0;
        while (c < palette && mark[c] == static_cast<int>(v)) ++c;
        if (c == palette) {
            ++palette;
            mark.push_back(-1);
        }
        res.colour[v] = c;
    }
    res.palette = palette;
    return res;
}

std::vector<std::uint32_t> cell_lexicographic_order(const rgg::GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    const int d = g.cloud.dim;
    const rgg::SpatialGrid grid(g.cloud, g.r);
    const auto& cells = grid.point_cells();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        for (int j = 0; j < d; ++j) {
            if (cells[a * d + j] != cells[b * d + j]) return cells[a * d + j] < cells[b * d + j];
        }
        return a < b;
    });
    return order;
}

// Smallest-last (degeneracy) order.
std::vector<std::uint32_t> degeneracy_order(const rgg::GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::size_t> deg(n);
    std::size_t maxdeg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        deg[i] = g.degree(i);
        maxdeg = std::max(maxdeg, deg[i]);
    }
    std::vector<std::vector<std::uint32_t>> buckets(maxdeg + 1);
    for (std::size_t i = 0; i < n; ++i) buckets[deg[i]].push_back(static_cast<std::uint32_t>(i));
    std::vector<bool> removed(n, false);
    std::vector<std::uint32_t> order;
    order.reserve(n);
    std::size_t cursor = 0;
    while (order.size() < n) {
        while (cursor <= maxdeg && buckets[cursor].empty()) ++cursor;
        if (cursor > maxdeg) break;
        const std::uint32_t v = buckets[cursor].back();
        buckets[cursor].pop_back();
        // entries go stale when a degree drops; the fresh entry was pushed
        // at decrement time
        if (removed[v] || deg[v] != cursor) continue;
        removed[v] = true;
        order.push_back(v);
        for (std::uint32_t w : g.neighbors_of(v))
            if (!removed[w] && deg[w] > 0) {
                --deg[w];
                buckets[deg[w]].push_back(w);
                if (deg[w] < cursor) cursor = deg[w];
            }
    }
    std::reverse(order.begin(), order.end()); // colour highest-coreness last removed first
    return order;
}

// Greedy clique grown from a max-degree seed: sweep its neighbourhood in
// descending-degree order and keep vertices compatible with the clique so far.
int greedy_clique_lower(const rgg::GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return 0;
    std::uint32_t seed = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (g.degree(i) > g.degree(seed)) seed = static_cast<std::uint32_t>(i);
    std::vector<std::uint32_t> cand(g.neighbors_of(seed).begin(), g.neighbors_of(seed).end());
    std::stable_sort(cand.begin(), cand.end(), [&](std::uint32_t a, std::uint32_t b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<std::uint32_t> clique{seed};
    for (std::uint32_t v : cand) {
        bool ok = true;
        for (std::uint32_t u : clique)
            if (u != seed && !g.adjacent(v, u)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

} // namespace

ChromaticBounds chromatic_bounds(const rgg::GeometricGraph& g, const ChromaticBoundsOptions& opt) {
    ChromaticBounds out;
    const std::size_t n = g.num_vertices();
    if (n == 0) {
        out.greedy.method = ColouringMethod::Greedy;
        return out;
    }

    int lower = greedy_clique_lower(g);

    // Dual scan bounds: chi >= chi_f >= any achieved translate sum of a
    // certified feasible function.
    double best_scan = 0.0;
    if (opt.phi0_scan_hint) {
        best_scan = *opt.phi0_scan_hint;
    } else if (n <= opt.scan_budget) {
        best_scan = scan::scan_ball(g.cloud, g.r / 2.0, g.norm).value;
    }
    if (n <= opt.radial_scan_budget) {
        for (const auto& entry : limits::standard_catalog(g.norm).entries)
            if (entry.radial && entry.radial->rings.size() >= 2)
                best_scan = std::max(best_scan, dual_bound(g.cloud, g.r, g.norm, *entry.radial));
    }
    lower = std::max(lower, static_cast<int>(std::ceil(best_scan - 1e-9)));

    ColouringResult a = greedy_colouring(g, cell_lexicographic_order(g));
    ColouringResult b = greedy_colouring(g, degeneracy_order(g));
    out.greedy = (b.palette < a.palette) ? std::move(b) : std::move(a);
    out.upper = out.greedy.palette;
    out.lower = std::min(lower, out.upper); // lower <= upper by construction
    return out;
}

namespace {

struct DsaturSearch {
    const detail::BitGraph& g;
    std::size_t n;
    std::size_t colour_words;
    std::vector<int> colour;
    std::vector<std::uint64_t> neighbour_colours; // n * colour_words
    std::vector<int> best_colour;
    int best;          // palette of best colouring found
    int lower;         // clique bound
    long long nodes = 0;
    long long budget;
    bool exhausted = false;

    DsaturSearch(const detail::BitGraph& graph, int ub, int lb, long long node_budget)
        : g(graph), n(graph.n()), colour_words((ub + 64) / 64), colour(n, -1),
          neighbour_colours(n * colour_words, 0), best(ub), lower(lb), budget(node_budget) {}

    bool colour_seen(std::size_t v, int c) const {
        return (neighbour_colours[v * colour_words + (c >> 6)] >> (c & 63)) & 1ULL;
    }
    int saturation(std::size_t v) const {
        int s = 0;
        for (std::size_t k = 0; k < colour_words; ++k)
            s += std::popcount(neighbour_colours[v * colour_words + k]);
        return s;
    }

    void flip_neighbours(std::size_t v, int c, std::vector<std::size_t>& changed) {
        changed.clear();
        const std::uint64_t* row = g.row(v);
        for (std::size_t w = 0; w < n; ++w) {
            if (!((row[w >> 6] >> (w & 63)) & 1ULL)) continue;
            std::uint64_t& word = neighbour_colours[w * colour_words + (c >> 6)];
            const std::uint64_t bit = 1ULL << (c & 63);
            if (!(word & bit)) {
                word |= bit;
                changed.push_back(w);
            }
        }
    }
    void unflip(int c, const std::vector<std::size_t>& changed) {
        const std::uint64_t bit = 1ULL << (c & 63);
        for (std::size_t w : changed) neighbour_colours[w * colour_words + (c >> 6)] &= ~bit;
    }

    // returns true when an optimal (== lower) colouring was found
    bool run(std::size_t coloured, int used) {
        if (used >= best) return false;
        if (coloured == n) {
            best = used;
            best_colour = colour;
            return best <= lower;
        }
        if (++nodes > budget) {
            exhausted = true;
            return true; // unwind
        }
        // DSATUR pick: max saturation, tie max degree, tie min index.
        std::size_t pick = static_cast<std::size_t>(-1);
        int pick_sat = -1;
        std::size_t pick_deg = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            const int s = saturation(v);
            const std::size_t dg = g.degree(v);
            if (s > pick_sat || (s == pick_sat && dg > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = dg;
            }
        }
        std::vector<std::size_t> changed;
        const int cap = std::min(used + 1, best - 1);
        for (int c = 0; c < cap; ++c) {
            if (colour_seen(pick, c)) continue;
            colour[pick] = c;
            flip_neighbours(pick, c, changed);
            const bool done = run(coloured + 1, std::max(used, c + 1));
            unflip(c, changed);
            colour[pick] = -1;
            if (done) return true;
        }
        return false;
    }
};

// Exact chromatic number of one component given as a BitGraph.
// Returns nullopt when the node budget is exhausted.
std::optional<std::pair<int, std::vector<int>>> component_chromatic(const detail::BitGraph& local,
                                                                    long long budget) {
    const std::size_t n = local.n();
    if (n == 0) return std::make_pair(0, std::vector<int>{});
    if (n == 1) return std::make_pair(1, std::vector<int>{0});

    // Greedy upper bound (by descending degree) on the component.
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto da = local.degree(a), db = local.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<int> greedy(n, -1);
    int greedy_palette = 0;
    for (std::uint32_t v : order) {
        std::vector<char> used(greedy_palette + 1, 0);
        const std::uint64_t* row = local.row(v);
        for (std::size_t w = 0; w < n; ++w)
            if (((row[w >> 6] >> (w & 63)) & 1ULL) && greedy[w] >= 0 &&
                greedy[w] <= greedy_palette)
                used[greedy[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        greedy[v] = c;
        greedy_palette = std::max(greedy_palette, c + 1);
    }

    // Clique lower bound.
    int omega = 1;
    std::vector<std::uint32_t> witness;
    detail::max_clique_search(local, omega, witness);

    std::size_t maxdeg = 0;
    for (std::size_t v = 0; v < n; ++v) maxdeg = std::max(maxdeg, local.degree(v));

    // chi <= Delta + 1 always; with Delta = omega - 1 the clique bound closes
    // and the greedy colouring necessarily uses exactly omega colours.
    if (static_cast<int>(maxdeg) == omega - 1) return std::make_pair(omega, greedy);

    // Triangle-free: bipartite test; odd cycles need 3 colours.
    if (omega == 2) {
        std::vector<int> side(n, -1);
        std::vector<std::size_t> stack;
        bool bipartite = true;
        side[0] = 0;
        stack.push_back(0);
        while (!stack.empty() && bipartite) {
            const std::size_t v = stack.back();
            stack.pop_back();
            const std::uint64_t* row = local.row(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (!((row[w >> 6] >> (w & 63)) & 1ULL)) continue;
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    bipartite = false;
                    break;
                }
            }
        }
        if (bipartite) return std::make_pair(2, side);
        if (greedy_palette == 3) return std::make_pair(3, greedy);
        // fall through to the exact search with lower bound 3
        omega = 3;
    }

    if (greedy_palette == omega) return std::make_pair(omega, greedy);

    DsaturSearch search(local, greedy_palette, omega, budget);
    search.best_colour = greedy;
    search.run(0, 0);
    if (search.exhausted) return std::nullopt;
    return std::make_pair(search.best, search.best_colour);
}

} // namespace

std::optional<ExactChromatic> chromatic_number_exact(const rgg::GeometricGraph& g,
                                                     long long node_budget) {
    const std::size_t n = g.num_vertices();
    ExactChromatic out;
    out.colouring.method = ColouringMethod::Exact;
    out.colouring.colour.assign(n, -1);
    if (n == 0) return out;

    const auto comps = connected_components(g);
    int chi = 0;
    for (const auto& comp : comps) {
        const detail::BitGraph local(g, comp);
        auto res = component_chromatic(local, node_budget);
        if (!res) return std::nullopt;
        chi = std::max(chi, res->first);
        for (std::size_t li = 0; li < comp.size(); ++li)
            out.colouring.colour[comp[li]] = res->second[li];
    }
    out.chi = chi;
    out.colouring.palette = chi;
    return out;
}

} // namespace rgglab::graphkit
