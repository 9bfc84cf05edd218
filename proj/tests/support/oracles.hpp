#pragma once

// Independent oracles used by the unit and acceptance suites.  Everything
// here recomputes expected values by brute force or elementary numerics,
// deliberately sharing no code with the library implementations.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "rgglab/cloud.hpp"
#include "rgglab/geometry.hpp"
#include "rgglab/graph.hpp"
#include "rgglab/profiles.hpp"
#include "rgglab/rng.hpp"

namespace oracle {

// ---- analytic -------------------------------------------------------------

inline long double H_ld(long double x) { return x * std::log(x) - x + 1.0L; }

// c(w,t) by plain long-double bisection on H(x/w) = 1/(wt).
inline double solve_c(double w, double t) {
    if (std::isinf(t)) return w;
    const long double target = 1.0L / (static_cast<long double>(w) * t);
    long double lo = 1.0L, hi = 2.0L;
    while (H_ld(hi) < target) hi *= 2.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (H_ld(mid) < target ? lo : hi) = mid;
    }
    return static_cast<double>(w * 0.5L * (lo + hi));
}

// s(phi,t) by bisection on sum_i v_i H(e^{s a_i}) = 1/t.
inline double weighting_value(const rgglab::limits::FunctionProfile& phi, double t) {
    const long double target = 1.0L / static_cast<long double>(t);
    auto f = [&](long double s) {
        long double acc = 0.0L;
        for (const auto& l : phi.levels) acc += l.volume * H_ld(std::exp(s * l.value));
        return acc;
    };
    long double lo = 0.0L, hi = 1.0L;
    while (f(hi) < target) hi *= 2.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return static_cast<double>(0.5L * (lo + hi));
}

inline double xi(const rgglab::limits::FunctionProfile& phi, double t) {
    if (std::isinf(t)) {
        long double acc = 0.0L;
        for (const auto& l : phi.levels) acc += static_cast<long double>(l.value) * l.volume;
        return static_cast<double>(acc);
    }
    const long double s = oracle::weighting_value(phi, t);
    long double acc = 0.0L;
    for (const auto& l : phi.levels)
        acc += static_cast<long double>(l.value) * std::exp(s * l.value) * l.volume;
    return static_cast<double>(acc);
}

// Random profile with 1-5 levels, values in (0, 4], volumes in (0, 3].
inline rgglab::limits::FunctionProfile random_profile(rgglab::CounterRng rng,
                                                      std::uint64_t& counter) {
    rgglab::limits::FunctionProfile p;
    const int k = 1 + static_cast<int>(rng.at(counter++) % 5);
    for (int i = 0; i < k; ++i) {
        double value = 4.0 * rng.unit(counter++) + 1e-3;
        const double volume = 3.0 * rng.unit(counter++) + 1e-3;
        // nudge duplicates apart
        for (const auto& l : p.levels)
            while (l.value == value) value = std::nextafter(value, 5.0);
        p.levels.push_back({value, volume});
    }
    return p;
}

// ---- graphs ---------------------------------------------------------------

// Adjacency as bitmasks, n <= 32.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    bool edge(int i, int j) const { return (adj[i] >> j) & 1u; }
};

inline SmallGraph small_graph(const rgglab::rgg::GeometricGraph& g) {
    SmallGraph s;
    s.n = static_cast<int>(g.num_vertices());
    s.adj.assign(s.n, 0);
    for (int i = 0; i < s.n; ++i)
        for (auto j : g.neighbors_of(i)) s.adj[i] |= 1u << j;
    return s;
}

// Exhaustive maximum clique.
inline int brute_clique(const SmallGraph& g) {
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool ok = true;
        for (int i = 0; i < g.n && ok; ++i) {
            if (!((mask >> i) & 1u)) continue;
            const std::uint32_t others = mask & ~(1u << i);
            if ((g.adj[i] & others) != others) ok = false;
        }
        if (ok) best = size;
    }
    return std::max(best, g.n > 0 ? 1 : 0);
}

// k-colourability by backtracking.
inline bool brute_colourable(const SmallGraph& g, int k, std::vector<int>& colour, int v) {
    if (v == g.n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.edge(u, v) && colour[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colour[v] = c;
        if (brute_colourable(g, k, colour, v + 1)) return true;
        colour[v] = -1;
    }
    return false;
}

inline int brute_chromatic(const SmallGraph& g) {
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> colour(g.n, -1);
        if (brute_colourable(g, k, colour, 0)) return k;
    }
    return g.n;
}

// All stable sets (nonempty) as bitmasks.
inline std::vector<std::uint32_t> all_stable_sets(const SmallGraph& g) {
    std::vector<std::uint32_t> sets;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (int i = 0; i < g.n && ok; ++i)
            if (((mask >> i) & 1u) && (g.adj[i] & mask)) ok = false;
        if (ok) sets.push_back(mask);
    }
    return sets;
}

// ---- planar geometry ------------------------------------------------------

struct Disk {
    double x = 0.0, y = 0.0, r = -1.0;
    bool contains(double px, double py, double tol) const {
        const double dx = px - x, dy = py - y;
        return std::sqrt(dx * dx + dy * dy) <= r + tol;
    }
};

inline Disk disk_from2(double ax, double ay, double bx, double by) {
    Disk d;
    d.x = 0.5 * (ax + bx);
    d.y = 0.5 * (ay + by);
    d.r = 0.5 * std::hypot(ax - bx, ay - by);
    return d;
}

inline Disk disk_from3(double ax, double ay, double bx, double by, double cx, double cy) {
    const double bxr = bx - ax, byr = by - ay, cxr = cx - ax, cyr = cy - ay;
    const double b2 = bxr * bxr + byr * byr, c2 = cxr * cxr + cyr * cyr;
    const double det = bxr * cyr - byr * cxr;
    if (std::fabs(det) < 1e-15) { // collinear: widest pair
        Disk d1 = disk_from2(ax, ay, bx, by);
        Disk d2 = disk_from2(ax, ay, cx, cy);
        Disk d3 = disk_from2(bx, by, cx, cy);
        Disk best = d1;
        if (d2.r > best.r) best = d2;
        if (d3.r > best.r) best = d3;
        return best;
    }
    Disk d;
    d.x = ax + (cyr * b2 - byr * c2) / (2.0 * det);
    d.y = ay + (bxr * c2 - cxr * b2) / (2.0 * det);
    d.r = std::hypot(d.x - ax, d.y - ay);
    return d;
}

// Smallest enclosing disk, Welzl's algorithm (iterative restarts are
// unnecessary at the sizes used in tests).
inline Disk welzl(const std::vector<std::pair<double, double>>& pts, std::vector<int>& idx,
                  int n, std::vector<std::pair<double, double>>& boundary) {
    if (n == 0 || boundary.size() == 3) {
        switch (boundary.size()) {
        case 0: return {};
        case 1: return {boundary[0].first, boundary[0].second, 0.0};
        case 2:
            return disk_from2(boundary[0].first, boundary[0].second, boundary[1].first,
                              boundary[1].second);
        default:
            return disk_from3(boundary[0].first, boundary[0].second, boundary[1].first,
                              boundary[1].second, boundary[2].first, boundary[2].second);
        }
    }
    const auto p = pts[idx[n - 1]];
    Disk d = welzl(pts, idx, n - 1, boundary);
    if (d.r >= 0.0 && d.contains(p.first, p.second, 1e-12)) return d;
    boundary.push_back(p);
    d = welzl(pts, idx, n - 1, boundary);
    boundary.pop_back();
    return d;
}

inline Disk smallest_enclosing_disk(const std::vector<std::pair<double, double>>& pts) {
    std::vector<int> idx(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<std::pair<double, double>> boundary;
    return welzl(pts, idx, static_cast<int>(pts.size()), boundary);
}

// Max |S| over subsets with smallest-enclosing-disk radius <= rho.
inline int seb_scan_oracle(const rgglab::rgg::PointCloud& cloud, double rho) {
    const int n = static_cast<int>(cloud.n);
    int best = 0;
    std::vector<std::pair<double, double>> subset;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        subset.clear();
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) subset.emplace_back(cloud.point(i)[0], cloud.point(i)[1]);
        if (smallest_enclosing_disk(subset).r <= rho + 1e-9) best = size;
    }
    return best;
}

// C5 as a geometric graph: the regular pentagon with circumradius 1 and a
// threshold between side (~1.1756) and diagonal (~1.9021).  With r = 1.9 the
// circumcentre lies in the half-level ring of the certified phi_beta
// functions, so the dual scan can reach 5/2.
inline rgglab::rgg::PointCloud pentagon_cloud() {
    rgglab::rgg::PointCloud cloud;
    cloud.dim = 2;
    cloud.n = 5;
    cloud.seed = 0;
    cloud.sigma = 1.0;
    for (int k = 0; k < 5; ++k) {
        const double a = 2.0 * M_PI * k / 5.0;
        cloud.coords.push_back(std::cos(a) + 2.0); // keep coordinates positive
        cloud.coords.push_back(std::sin(a) + 2.0);
    }
    return cloud;
}
inline constexpr double pentagon_r = 1.9;

} // namespace oracle
