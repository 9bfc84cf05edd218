#include "rgglab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "rgglab/spatial_grid.hpp"

namespace rgglab::rgg {

std::size_t GeometricGraph::max_degree() const {
    std::size_t m = 0;
    for (std::size_t i = 0; i < num_vertices(); ++i) m = std::max(m, degree(i));
    return m;
}

bool GeometricGraph::adjacent(std::uint32_t i, std::uint32_t j) const {
    const auto row = neighbors_of(i);
    return std::binary_search(row.begin(), row.end(), j);
}

namespace {

// Enumerates, for vertex i, all candidate points in the 3^d neighbouring
// cells and calls `fn(j)` for every j != i with ||X_i - X_j|| <= r.
template <class Fn>
void for_neighbors(const SpatialGrid& grid, const PointCloud& cloud,
                   const geometry::NormSpec& norm, double r, std::uint32_t i, Fn&& fn) {
    const int d = cloud.dim;
    const std::int64_t* base = &grid.point_cells()[static_cast<std::size_t>(i) * d];
    std::int64_t probe[8];
    std::vector<std::int64_t> probe_big;
    std::int64_t* pr = probe;
    if (d > 8) {
        probe_big.resize(d);
        pr = probe_big.data();
    }
    std::vector<int> off(d, -1);
    const double* pi = cloud.point(i);
    for (;;) {
        for (int j = 0; j < d; ++j) pr[j] = base[j] + off[j];
        auto [begin, end] = grid.cell_range(pr);
        for (const std::uint32_t* it = begin; it != end; ++it) {
            const std::uint32_t j = *it;
            if (j != i && geometry::distance_le(norm, pi, cloud.point(j), r)) fn(j);
        }
        int axis = 0;
        while (axis < d && ++off[axis] > 1) off[axis++] = -1;
        if (axis == d) break;
    }
}

} // namespace

GeometricGraph build_graph(PointCloud cloud, double r, const geometry::NormSpec& norm) {
    if (!(r > 0.0)) throw std::invalid_argument("build_graph requires r > 0");
    if (cloud.dim != norm.dim)
        throw std::invalid_argument("cloud dimension does not match norm dimension");

    GeometricGraph g;
    g.r = r;
    g.norm = norm;
    g.cloud = std::move(cloud);
    const std::size_t n = g.cloud.n;
    g.offsets.assign(n + 1, 0);
    if (n == 0) return g;

    const SpatialGrid grid(g.cloud, r);

    // Two passes keep memory at exactly CSR size and make the result
    // independent of the schedule: counts first, then a fill of each row.
    std::vector<std::size_t> deg(n, 0);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        std::size_t c = 0;
        for_neighbors(grid, g.cloud, norm, r, static_cast<std::uint32_t>(i),
                      [&](std::uint32_t) { ++c; });
        deg[i] = c;
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] = g.offsets[i] + deg[i];
    g.neighbors.resize(g.offsets[n]);

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        std::size_t k = g.offsets[i];
        for_neighbors(grid, g.cloud, norm, r, static_cast<std::uint32_t>(i),
                      [&](std::uint32_t j) { g.neighbors[k++] = j; });
        std::sort(g.neighbors.begin() + g.offsets[i], g.neighbors.begin() + k);
    }
    return g;
}

GeometricGraph build_graph_reference(PointCloud cloud, double r,
                                     const geometry::NormSpec& norm) {
    if (!(r > 0.0)) throw std::invalid_argument("build_graph requires r > 0");
    if (cloud.dim != norm.dim)
        throw std::invalid_argument("cloud dimension does not match norm dimension");

    GeometricGraph g;
    g.r = r;
    g.norm = norm;
    g.cloud = std::move(cloud);
    const std::size_t n = g.cloud.n;

    std::vector<std::vector<std::uint32_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (geometry::distance_le(norm, g.cloud.point(i), g.cloud.point(j), r)) {
                adj[i].push_back(static_cast<std::uint32_t>(j));
                adj[j].push_back(static_cast<std::uint32_t>(i));
            }

    g.offsets.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets[i + 1] = g.offsets[i] + adj[i].size();
    g.neighbors.resize(g.offsets[n]);
    for (std::size_t i = 0; i < n; ++i)
        std::copy(adj[i].begin(), adj[i].end(), g.neighbors.begin() + g.offsets[i]);
    return g;
}

void write_edge_list(std::ostream& out, const GeometricGraph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        for (std::uint32_t j : g.neighbors_of(i))
            if (j > i) out << i << ' ' << j << '\n';
}

std::vector<std::vector<std::uint32_t>> connected_components(const GeometricGraph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = true;
        stack.push_back(static_cast<std::uint32_t>(s));
        while (!stack.empty()) {
            const std::uint32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (std::uint32_t w : g.neighbors_of(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

} // namespace rgglab::rgg
