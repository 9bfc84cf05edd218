#include "rgglab/graphkit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>

#include "bitgraph.hpp"
#include "rgglab/spatial_grid.hpp"

namespace rgglab::graphkit {

namespace detail {

// Radius factor of the smallest ball enclosing any set of diameter 1:
// Jung's constant for the Euclidean norm, 1/2 for the max norm (a cube of
// side 1 suffices), and the Bohnenblust bound d/(d+1) for everything else.
double enclosing_radius_factor(const geometry::NormSpec& norm) {
    if (geometry::is_linf(norm)) return 0.5;
    const double d = static_cast<double>(norm.dim);
    if (geometry::is_euclidean(norm)) return std::sqrt(d / (2.0 * (d + 1.0)));
    return d / (d + 1.0);
}

// Cell subproblems for the clique search.  Every clique has diameter <= r,
// so it lies in a ball of radius jung*r around some centre point; gridding
// the possible centres with cells of side h, the clique is contained in the
// ball of radius jung*r + (cell diameter)/2 around the centre of the cell
// holding its enclosing-ball centre.  Candidate cells are those within
// jung*r of a data point.
struct CellSubproblems {
    std::vector<std::vector<std::uint32_t>> vertex_sets; // ascending ids
    std::vector<std::vector<double>> centres;
    std::vector<std::size_t> order; // by descending size
};

CellSubproblems make_cell_subproblems(const rgg::GeometricGraph& g, double cell_side,
                                      double ball_radius, double centre_reach) {
    CellSubproblems out;
    const auto& cloud = g.cloud;
    const int d = cloud.dim;
    const double h = cell_side;
    const rgg::SpatialGrid grid(cloud, h);
    const double rho = geometry::unit_cube_diameter(g.norm);
    const double radius = ball_radius + 0.5 * h * rho;

    // Gather candidate cells: all cells within centre_reach of a data point.
    const long long reach_cells = static_cast<long long>(std::ceil(centre_reach / h));
    std::vector<std::int64_t> keys; // flattened cell tuples
    std::vector<std::int64_t> key(d);
    for (std::size_t i = 0; i < cloud.n; ++i) {
        const double* p = cloud.point(i);
        std::vector<long long> base(d), off(d, -reach_cells);
        for (int j = 0; j < d; ++j) base[j] = static_cast<long long>(std::floor(p[j] / h));
        for (;;) {
            for (int j = 0; j < d; ++j) keys.push_back(base[j] + off[j]);
            int axis = 0;
            while (axis < d && ++off[axis] > reach_cells) off[axis++] = -reach_cells;
            if (axis == d) break;
        }
    }
    // dedupe cell tuples
    const std::size_t num_keys = keys.size() / d;
    std::vector<std::size_t> idx(num_keys);
    for (std::size_t k = 0; k < num_keys; ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(&keys[a * d], &keys[a * d] + d, &keys[b * d],
                                            &keys[b * d] + d);
    });

    std::vector<double> centre(d);
    std::vector<std::uint32_t> members;
    const std::int64_t* prev = nullptr;
    for (std::size_t k : idx) {
        const std::int64_t* cur = &keys[k * d];
        if (prev && std::equal(cur, cur + d, prev)) continue;
        prev = cur;
        for (int j = 0; j < d; ++j) centre[j] = (static_cast<double>(cur[j]) + 0.5) * h;
        grid.collect_within(g.norm, centre.data(), radius, members);
        if (members.empty()) continue;
        std::sort(members.begin(), members.end());
        out.vertex_sets.push_back(members);
        out.centres.push_back(centre);
    }

    out.order.resize(out.vertex_sets.size());
    for (std::size_t k = 0; k < out.order.size(); ++k) out.order[k] = k;
    std::sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
        if (out.vertex_sets[a].size() != out.vertex_sets[b].size())
            return out.vertex_sets[a].size() > out.vertex_sets[b].size();
        return a < b;
    });
    return out;
}

// Greedy clique: sweep the cell's vertices outward from the centre, keeping
// each vertex compatible (within distance r) of everything taken so far.
// Works directly on coordinates so it can run on every cell cheaply.
int greedy_clique_size(const rgg::GeometricGraph& g, const std::vector<std::uint32_t>& verts,
                       const std::vector<double>& centre) {
    if (verts.empty()) return 0;
    const std::size_t n = verts.size();
    std::vector<std::uint32_t> by_dist(verts);
    std::vector<double> dist(n);
    for (std::size_t i = 0; i < n; ++i)
        dist[i] = geometry::distance(g.norm, g.cloud.point_span(verts[i]),
                                     std::span<const double>(centre.data(), centre.size()));
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

    std::vector<std::uint32_t> chosen;
    for (std::size_t i : idx) {
        const double* p = g.cloud.point(verts[i]);
        bool ok = true;
        for (std::uint32_t u : chosen)
            if (!geometry::distance_le(g.norm, p, g.cloud.point(u), g.r)) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(verts[i]);
    }
    return static_cast<int>(chosen.size());
}

// Degree-descending relabelling tightens the greedy colouring bound inside
// the branch and bound.
BitGraph by_degree(const rgg::GeometricGraph& g, const std::vector<std::uint32_t>& verts) {
    const BitGraph plain(g, verts);
    const std::size_t n = plain.n();
    std::vector<std::uint32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::vector<std::size_t> deg(n);
    for (std::size_t i = 0; i < n; ++i) deg[i] = plain.degree(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return deg[a] > deg[b]; });
    std::vector<std::uint32_t> relabelled(n);
    for (std::size_t i = 0; i < n; ++i) relabelled[i] = plain.global_id(order[i]);
    return BitGraph::relabelled(plain, order, relabelled);
}

} // namespace detail

CliqueResult clique_number(const rgg::GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return {};

    // Coarse pass: cells of side r/2 around the data cells, subproblem
    // radius r + half diagonal (cliques lie within r of each member).
    // Enough on its own for sparse instances; for dense ones the tighter
    // enclosing-ball decomposition keeps the branch and bound in its easy
    // regime (the clique then fills most of its subproblem).
    const double jung = detail::enclosing_radius_factor(g.norm);
    auto sub = detail::make_cell_subproblems(g, g.r / 2.0, g.r, 0.0);
    std::size_t largest = 0;
    for (const auto& s : sub.vertex_sets) largest = std::max(largest, s.size());
    if (largest > 220)
        sub = detail::make_cell_subproblems(g, g.r / 8.0, jung * g.r, jung * g.r);

    // Greedy cliques on every cell: a strong deterministic incumbent, and a
    // priority for the witness scan.
    std::vector<int> greedy(sub.order.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long k = 0; k < static_cast<long long>(sub.order.size()); ++k) {
        const std::size_t c = sub.order[k];
        greedy[k] = detail::greedy_clique_size(g, sub.vertex_sets[c], sub.centres[c]);
    }
    int inc0 = 1;
    for (int v : greedy) inc0 = std::max(inc0, v);

    // Round A: the exact value.  Cells run in parallel with a shared
    // incumbent; the maximum is schedule independent.
    std::atomic<int> best{inc0};
#pragma omp parallel for schedule(dynamic, 1)
    for (long long k = 0; k < static_cast<long long>(sub.order.size()); ++k) {
        const auto& verts = sub.vertex_sets[sub.order[k]];
        int local_best = best.load(std::memory_order_relaxed);
        if (static_cast<int>(verts.size()) <= local_best) continue;
        const detail::BitGraph local = detail::by_degree(g, verts);
        std::vector<std::uint32_t> witness;
        detail::max_clique_search(local, local_best, witness);
        int cur = best.load(std::memory_order_relaxed);
        while (local_best > cur &&
               !best.compare_exchange_weak(cur, local_best, std::memory_order_relaxed)) {
        }
    }
    const int omega = best.load();

    // Round B: deterministic witness.  Scan cells by descending greedy
    // score (ties by the fixed size order) with the incumbent one below
    // omega; the first subproblem that reaches omega yields the witness.
    std::vector<std::size_t> scan_order(sub.order.size());
    for (std::size_t k = 0; k < scan_order.size(); ++k) scan_order[k] = k;
    std::stable_sort(scan_order.begin(), scan_order.end(),
                     [&](std::size_t a, std::size_t b) { return greedy[a] > greedy[b]; });

    CliqueResult result;
    result.size = omega;
    for (std::size_t k : scan_order) {
        const auto& verts = sub.vertex_sets[sub.order[k]];
        if (static_cast<int>(verts.size()) < omega) continue;
        const detail::BitGraph local = detail::by_degree(g, verts);
        int inc = omega - 1;
        std::vector<std::uint32_t> witness;
        detail::max_clique_search(local, inc, witness);
        if (inc == omega && !witness.empty()) {
            for (std::uint32_t v : witness) result.witness.push_back(local.global_id(v));
            std::sort(result.witness.begin(), result.witness.end());
            break;
        }
    }
    return result;
}

} // namespace rgglab::graphkit
