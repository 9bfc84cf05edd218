#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rgglab/graphkit.hpp"
#include "simplex.hpp"

namespace rgglab::graphkit {

namespace {

// Vertices of the window template: integer offsets in [-K,K)^d, indexed
// lexicographically.
std::vector<std::vector<int>> window_offsets(int K, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, -K);
    for (;;) {
        out.push_back(cur);
        int axis = d - 1;
        while (axis >= 0 && ++cur[axis] >= K) cur[axis--] = -K;
        if (axis < 0) break;
    }
    return out;
}

// All maximal stable sets (plus singletons) of the cell graph: offsets are
// adjacent when ||eps (o - o')|| < 1 + eps rho.
std::vector<std::vector<int>> cell_graph_stable_sets(const std::vector<std::vector<int>>& offs,
                                                     double eps,
                                                     const geometry::NormSpec& norm,
                                                     std::size_t budget) {
    const int m = static_cast<int>(offs.size());
    const int d = norm.dim;
    const double rho = geometry::unit_cube_diameter(norm);
    std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
    std::vector<double> diff(d);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            for (int j = 0; j < d; ++j) diff[j] = eps * (offs[a][j] - offs[b][j]);
            const bool edge = geometry::norm_eval(norm, diff) < 1.0 + eps * rho;
            adj[a][b] = adj[b][a] = edge;
        }

    std::set<std::vector<int>> sets;
    // maximal stable sets by backtracking over vertex order
    std::vector<int> chosen;
    std::vector<char> banned(m, 0);
    auto emit = [&](const std::vector<int>& s) {
        if (sets.size() >= budget)
            throw std::invalid_argument(
                "stable-set enumeration budget exceeded for this (eps, K)");
        sets.insert(s);
    };
    std::vector<int> stack_bans;
    std::function<void(int)> rec = [&](int v) {
        if (v == m) {
            // maximal iff every vertex outside conflicts with the set
            for (int u = 0; u < m; ++u) {
                if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) continue;
                bool conflict = false;
                for (int c : chosen)
                    if (adj[u][c]) {
                        conflict = true;
                        break;
                    }
                if (!conflict) return;
            }
            if (!chosen.empty()) emit(chosen);
            return;
        }
        // branch: include v when possible
        bool can = true;
        for (int c : chosen)
            if (adj[v][c]) {
                can = false;
                break;
            }
        if (can) {
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
        }
        rec(v + 1);
    };
    rec(0);
    for (int v = 0; v < m; ++v) emit({v});
    return {sets.begin(), sets.end()};
}

struct WindowKey {
    int shift = 0;
    std::vector<std::int64_t> lattice;
    bool operator<(const WindowKey& o) const {
        if (shift != o.shift) return shift < o.shift;
        return lattice < o.lattice;
    }
};

struct WindowCell {
    int offset_index = 0;           // index into the window template
    std::size_t cell_index = 0;     // index into the data-cell table
};

} // namespace

GridLpResult grid_lp_colouring(const rgg::PointCloud& points, double r,
                               const geometry::NormSpec& norm, double eps, int K,
                               std::size_t stable_set_budget) {
    if (!(eps > 0.0 && eps <= 1.0))
        throw std::invalid_argument("grid_lp_colouring requires eps in (0,1]");
    if (K < 1) throw std::invalid_argument("grid_lp_colouring requires K >= 1");
    if (!(r > 0.0)) throw std::invalid_argument("grid_lp_colouring requires r > 0");
    if (points.dim != norm.dim)
        throw std::invalid_argument("cloud dimension does not match norm dimension");

    const int d = points.dim;
    const double rho = geometry::unit_cube_diameter(norm);
    const int L = static_cast<int>(std::ceil((1.0 + eps * rho) / eps));
    const int W = 2 * K + L;
    const auto offs = window_offsets(K, d);
    const int window_cells = static_cast<int>(offs.size()); // (2K)^d
    std::map<std::vector<int>, int> offset_index;
    for (int i = 0; i < window_cells; ++i) offset_index.emplace(offs[i], i);

    GridLpResult res;
    res.colouring.method = ColouringMethod::GridLp;
    res.colouring.colour.assign(points.n, -1);
    res.window_cells = window_cells;
    res.shifts = 1;
    for (int j = 0; j < d; ++j) res.shifts *= W;
    const double expand = std::pow(1.0 + static_cast<double>(L) / (2.0 * K), d);
    const double constant = std::pow(2.0 * K, 2 * d) * expand;
    if (points.n == 0) {
        res.guarantee_value = constant;
        return res;
    }

    const auto stable_sets = cell_graph_stable_sets(offs, eps, norm, stable_set_budget);

    // Data cells of side eps*r.
    const double side = eps * r;
    std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> cell_points;
    {
        std::vector<std::int64_t> key(d);
        for (std::size_t i = 0; i < points.n; ++i) {
            const double* p = points.point(i);
            for (int j = 0; j < d; ++j)
                key[j] = static_cast<std::int64_t>(std::floor(p[j] / side));
            cell_points[key].push_back(static_cast<std::uint32_t>(i));
        }
    }
    std::vector<const std::vector<std::uint32_t>*> cell_pts;
    std::vector<std::vector<std::int64_t>> cell_coord;
    for (auto& [coord, pts] : cell_points) {
        cell_coord.push_back(coord);
        cell_pts.push_back(&pts);
    }
    const std::size_t num_cells = cell_coord.size();

    // Shift enumeration order (lexicographic over [-K, K+L)^d).
    std::vector<std::vector<int>> shifts;
    {
        std::vector<int> cur(d, -K);
        for (;;) {
            shifts.push_back(cur);
            int axis = d - 1;
            while (axis >= 0 && ++cur[axis] >= K + L) cur[axis--] = -K;
            if (axis < 0) break;
        }
    }

    // Group (cell, covering shift) pairs into windows, and hand every cell's
    // points out chunkwise: chunk k of a cell goes to its k-th covering
    // shift, at most ceil(N / (2K)^d) points per chunk.
    const auto cap_of = [&](std::size_t nc) {
        return (nc + static_cast<std::size_t>(window_cells) - 1) /
               static_cast<std::size_t>(window_cells);
    };
    std::map<WindowKey, std::vector<WindowCell>> windows;
    for (std::size_t c = 0; c < num_cells; ++c) {
        int covering = 0;
        for (std::size_t s = 0; s < shifts.size(); ++s) {
            std::vector<int> u(d);
            std::vector<std::int64_t> lattice(d);
            bool covered = true;
            for (int j = 0; j < d; ++j) {
                const std::int64_t rel = cell_coord[c][j] - shifts[s][j] + K;
                std::int64_t q = rel >= 0 ? rel / W : -(((-rel) + W - 1) / W);
                const std::int64_t residue = rel - q * W;
                if (residue >= 2 * K) {
                    covered = false;
                    break;
                }
                u[j] = static_cast<int>(residue) - K;
                lattice[j] = q;
            }
            if (!covered) continue;
            WindowKey key{static_cast<int>(s), lattice};
            windows[key].push_back({offset_index.at(u), c});
            ++covering;
        }
        if (covering != window_cells)
            throw std::logic_error("internal error: cell covered by wrong number of shifts");
    }

    // Colour ids: (shift, class slot) pairs map to dense ids on first actual
    // use, so windows of one shift share a palette and empty classes cost
    // nothing.
    std::map<std::pair<int, int>, int> colour_ids;
    auto colour_of = [&](int shift, int slot) {
        auto [it, inserted] =
            colour_ids.emplace(std::make_pair(shift, slot), static_cast<int>(colour_ids.size()));
        return it->second;
    };

    double max_sum = 0.0;
    int solved = 0;

    // Per-cell chunk counter.  The windows map iterates shift-major, and a
    // cell meets each covering shift exactly once, so chunks are handed out
    // in shift order.
    std::vector<std::size_t> chunk_seen(num_cells, 0);

    for (auto& [key, members] : windows) {
        // rows: member cells (in template-offset order for determinism)
        std::sort(members.begin(), members.end(), [](const WindowCell& a, const WindowCell& b) {
            return a.offset_index < b.offset_index;
        });
        const std::size_t rows = members.size();
        detail::CoveringSimplex lp(rows);
        std::vector<double> rhs(rows);
        for (std::size_t i = 0; i < rows; ++i)
            rhs[i] = static_cast<double>(cell_pts[members[i].cell_index]->size()) /
                     static_cast<double>(window_cells);
        lp.set_rhs(rhs);

        // singleton columns first (identity basis), then restricted sets
        std::vector<std::size_t> singleton_ids(rows);
        std::vector<std::vector<std::uint32_t>> cols;
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(rows); ++i) {
            singleton_ids[i] = i;
            cols.push_back({i});
            lp.add_column({i});
        }
        std::map<int, std::uint32_t> offset_to_row;
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(rows); ++i)
            offset_to_row.emplace(members[i].offset_index, i);
        std::set<std::vector<std::uint32_t>> dedupe(cols.begin(), cols.end());
        for (const auto& s : stable_sets) {
            std::vector<std::uint32_t> restricted;
            for (int off : s) {
                auto it = offset_to_row.find(off);
                if (it != offset_to_row.end()) restricted.push_back(it->second);
            }
            if (restricted.size() < 2) continue;
            std::sort(restricted.begin(), restricted.end());
            if (!dedupe.insert(restricted).second) continue;
            cols.push_back(restricted);
            lp.add_column(restricted);
        }
        lp.init_singleton_basis(singleton_ids);
        lp.optimize();
        ++solved;

        // windowed translate sum with the full cell counts
        const auto y = lp.duals();
        double sum = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            sum += static_cast<double>(cell_pts[members[i].cell_index]->size()) *
                   std::max(0.0, y[i]);
        max_sum = std::max(max_sum, sum);

        // round the basic solution up to integer class copies
        std::vector<std::size_t> copies(cols.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const double x = lp.primal(j);
            if (x > 1e-9) copies[j] = static_cast<std::size_t>(std::ceil(x - 1e-9));
        }
        // repair any float shortfall with singletons (does not trigger in
        // exact arithmetic)
        for (std::size_t i = 0; i < rows; ++i) {
            std::size_t cover = 0;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (copies[j] && std::binary_search(cols[j].begin(), cols[j].end(),
                                                    static_cast<std::uint32_t>(i)))
                    cover += copies[j];
            const std::size_t need = cap_of(cell_pts[members[i].cell_index]->size());
            while (cover < need) {
                ++copies[i]; // singleton column i covers row i
                ++cover;
            }
        }

        // hand out this window's chunk of each member cell
        std::vector<std::vector<std::uint32_t>> chunk(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::size_t c = members[i].cell_index;
            const auto& pts = *cell_pts[c];
            const std::size_t cap = cap_of(pts.size());
            const std::size_t from = std::min(chunk_seen[c] * cap, pts.size());
            const std::size_t to = std::min(from + cap, pts.size());
            ++chunk_seen[c];
            chunk[i].assign(pts.begin() + from, pts.begin() + to);
        }

        int slot = 0;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t t = 0; t < copies[j]; ++t, ++slot) {
                for (std::uint32_t i : cols[j]) {
                    if (chunk[i].empty()) continue;
                    const std::uint32_t point = chunk[i].back();
                    chunk[i].pop_back();
                    res.colouring.colour[point] = colour_of(key.shift, slot);
                }
            }
        }
        for (std::size_t i = 0; i < rows; ++i)
            if (!chunk[i].empty())
                throw std::logic_error("internal error: window classes did not cover its chunk");
    }

    res.colouring.palette = static_cast<int>(colour_ids.size());
    res.windows_solved = solved;
    res.max_translate_sum = max_sum;
    res.guarantee_value = expand * max_sum + constant;
    return res;
}

} // namespace rgglab::graphkit
