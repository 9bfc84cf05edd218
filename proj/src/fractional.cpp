#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bitgraph.hpp"
#include "rgglab/graphkit.hpp"
#include "rgglab/scan.hpp"
#include "rgglab/spatial_grid.hpp"
#include "simplex.hpp"

namespace rgglab::graphkit {

namespace {

// Exact maximum-weight stable set by branch and bound.  Bound: within each
// geometry cell (diameter <= r, hence a clique) at most one vertex can be
// taken, so the sum of per-cell maxima over the remaining candidates is an
// upper bound.  Branching prefers the heaviest vertex, ties to the lowest
// index, which keeps results deterministic.
struct MwisSearch {
    const detail::BitGraph& g;
    const std::vector<double>& w;
    const std::vector<int>& cell; // clique-cover cell per vertex
    int num_cells;
    double best = 0.0;
    std::vector<std::uint32_t> best_set;
    std::vector<std::uint32_t> current;
    std::vector<double> cellmax; // scratch, num_cells

    MwisSearch(const detail::BitGraph& graph, const std::vector<double>& weights,
               const std::vector<int>& cells, int ncells)
        : g(graph), w(weights), cell(cells), num_cells(ncells), cellmax(ncells, 0.0) {}

    double bound(const detail::BitSetView& cand) {
        std::fill(cellmax.begin(), cellmax.end(), 0.0);
        double b = 0.0;
        for (std::size_t k = 0; k < cand.words; ++k) {
            std::uint64_t word = cand.w[k];
            while (word) {
                const std::size_t v = (k << 6) + std::countr_zero(word);
                word &= word - 1;
                double& m = cellmax[cell[v]];
                if (w[v] > m) {
                    b += w[v] - m;
                    m = w[v];
                }
            }
        }
        return b;
    }

    void run(std::vector<std::uint64_t>& pool, std::size_t depth, double acc) {
        detail::BitSetView cand{pool.data() + depth * g.words(), g.words()};
        // heaviest candidate, ties to lowest index
        std::size_t pick = static_cast<std::size_t>(-1);
        double pick_w = -1.0;
        for (std::size_t k = 0; k < cand.words; ++k) {
            std::uint64_t word = cand.w[k];
            while (word) {
                const std::size_t v = (k << 6) + std::countr_zero(word);
                word &= word - 1;
                if (w[v] > pick_w + 1e-15) {
                    pick = v;
                    pick_w = w[v];
                }
            }
        }
        if (pick == static_cast<std::size_t>(-1)) {
            if (acc > best + 1e-12) {
                best = acc;
                best_set = current;
            }
            return;
        }
        if (acc + bound(cand) <= best + 1e-12) return;

        // include pick
        detail::BitSetView next{pool.data() + (depth + 1) * g.words(), g.words()};
        next.copy_from(cand);
        next.reset(pick);
        next.andnot_with(g.row(pick));
        current.push_back(static_cast<std::uint32_t>(pick));
        run(pool, depth + 1, acc + w[pick]);
        current.pop_back();

        // exclude pick
        cand.reset(pick);
        run(pool, depth, acc);
    }
};

// Clique-cover cells: side r / ||(1,..,1)|| so every cell has diameter <= r.
std::pair<std::vector<int>, int> clique_cells(const rgg::GeometricGraph& g) {
    const double side = g.r / geometry::unit_cube_diameter(g.norm);
    const rgg::SpatialGrid grid(g.cloud, side);
    const int d = g.cloud.dim;
    const auto& coords = grid.point_cells();
    std::vector<std::size_t> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        for (int j = 0; j < d; ++j)
            if (coords[a * d + j] != coords[b * d + j])
                return coords[a * d + j] < coords[b * d + j];
        return a < b;
    });
    std::vector<int> cell(g.num_vertices(), 0);
    int id = -1;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || !std::equal(&coords[order[k] * d], &coords[order[k] * d] + d,
                                  &coords[order[k - 1] * d]))
            ++id;
        cell[order[k]] = id;
    }
    return {cell, id + 1};
}

std::vector<std::uint32_t> greedy_stable_set(const detail::BitGraph& g,
                                             const std::vector<std::uint32_t>& order) {
    auto blocked = g.make_set();
    detail::BitSetView view{blocked.data(), g.words()};
    std::vector<std::uint32_t> set;
    for (std::uint32_t v : order) {
        if (view.test(v)) continue;
        set.push_back(v);
        view.set(v);
        for (std::size_t k = 0; k < g.words(); ++k) view.w[k] |= g.row(v)[k];
    }
    std::sort(set.begin(), set.end());
    return set;
}

} // namespace

FractionalSolution fractional_chromatic(const rgg::GeometricGraph& g, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("fractional_chromatic requires tol > 0");
    const std::size_t n = g.num_vertices();
    FractionalSolution sol;
    if (n == 0) return sol;

    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    const detail::BitGraph local(g, all);
    auto [cells, num_cells] = clique_cells(g);

    detail::CoveringSimplex lp(n);
    std::vector<std::vector<std::uint32_t>> pool;
    auto add_set = [&](std::vector<std::uint32_t> s) {
        pool.push_back(s);
        lp.add_column(std::move(s));
    };

    // Singletons first: they form the identity starting basis.
    std::vector<std::size_t> singleton_ids(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        singleton_ids[v] = v;
        add_set({v});
    }

    // Greedy maximal stable sets from 5 deterministic orders seed the pool.
    {
        std::vector<std::uint32_t> order = all;
        add_set(greedy_stable_set(local, order));                       // index ascending
        std::reverse(order.begin(), order.end());
        add_set(greedy_stable_set(local, order));                       // index descending
        order = all;
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return local.degree(a) < local.degree(b);
        });
        add_set(greedy_stable_set(local, order));                       // degree ascending
        std::reverse(order.begin(), order.end());
        add_set(greedy_stable_set(local, order));                       // degree descending
        order = all;
        std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return cells[a] < cells[b] || (cells[a] == cells[b] && a < b);
        });
        add_set(greedy_stable_set(local, order));                       // cell lexicographic
    }

    lp.init_singleton_basis(singleton_ids);

    const double price_tol = tol / (2.0 * static_cast<double>(n));
    constexpr int kMaxRounds = 10000;
    std::vector<double> y;
    double max_weight = 1.0;
    for (int round = 0;; ++round) {
        if (round >= kMaxRounds)
            throw std::runtime_error("column generation iteration cap exceeded");
        lp.optimize();
        y = lp.duals();
        for (double& v : y) v = std::max(v, 0.0);

        MwisSearch mwis(local, y, cells, num_cells);
        std::vector<std::uint64_t> poolbits((n + 2) * local.words(), 0);
        detail::BitSetView root{poolbits.data(), local.words()};
        for (std::size_t i = 0; i < n; ++i) root.set(i);
        mwis.run(poolbits, 0, 0.0);

        max_weight = std::max(mwis.best, 1.0);
        if (mwis.best <= 1.0 + price_tol) break;
        std::sort(mwis.best_set.begin(), mwis.best_set.end());
        add_set(mwis.best_set);
    }

    sol.objective = lp.objective();
    for (std::size_t j = 0; j < pool.size(); ++j) {
        const double x = lp.primal(j);
        if (x > 1e-12) sol.cover.emplace_back(pool[j], x);
    }
    // Scaling by the exact pricing optimum makes the dual certificate
    // feasible outright.
    sol.dual.assign(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) sol.dual[v] = y[v] / max_weight;
    sol.dual_objective = std::accumulate(sol.dual.begin(), sol.dual.end(), 0.0);
    sol.gap = sol.objective - sol.dual_objective;
    return sol;
}

double dual_bound(const rgg::PointCloud& points, double r, const geometry::NormSpec& norm,
                  const limits::RadialLevels& phi) {
    if (phi.norm.p != norm.p || phi.norm.dim != norm.dim)
        throw std::invalid_argument("radial function was built for a different norm");
    if (points.n == 0) return 0.0;
    return scan::scan_radial(points, phi, r).value;
}

} // namespace rgglab::graphkit
