#include "rgglab/scan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rgglab/limits.hpp"
#include "rgglab/spatial_grid.hpp"

namespace rgglab::scan {

namespace {

struct Best {
    double value = -1.0;
    std::vector<double> witness;

    // Total order: larger value wins, ties to the lexicographically smallest
    // centre, so parallel reductions are schedule independent.
    void offer(double v, const double* x, int dim) {
        if (v < value) return;
        if (v == value && !witness.empty()) {
            bool smaller = false;
            for (int j = 0; j < dim; ++j) {
                if (x[j] < witness[j]) {
                    smaller = true;
                    break;
                }
                if (x[j] > witness[j]) return;
            }
            if (!smaller) return;
        }
        value = v;
        witness.assign(x, x + dim);
    }
    void merge(const Best& o, int dim) {
        if (o.value >= 0.0 && !o.witness.empty()) offer(o.value, o.witness.data(), dim);
    }
};

// Weighted count sum_i (a_i - a_{i+1}) |B(x, radii[i])| for nested radii.
double weighted_count(const rgg::SpatialGrid& grid, const geometry::NormSpec& norm,
                      const double* x, const std::vector<double>& radii,
                      const std::vector<double>& coeff) {
    double v = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k)
        v += coeff[k] * static_cast<double>(grid.count_within(norm, x, radii[k]));
    return v;
}

// Shared evaluation loop: apply `fn` at every candidate centre and reduce.
template <class Eval>
Best reduce_candidates(const std::vector<double>& candidates, int dim, Eval&& eval) {
    const std::size_t m = candidates.size() / dim;
    Best global;
#ifdef _OPENMP
#pragma omp parallel
    {
        Best local;
#pragma omp for schedule(static) nowait
        for (long long k = 0; k < static_cast<long long>(m); ++k)
            local.offer(eval(candidates.data() + k * dim), candidates.data() + k * dim, dim);
#pragma omp critical(rgglab_scan_reduce)
        global.merge(local, dim);
    }
#else
    for (std::size_t k = 0; k < m; ++k)
        global.offer(eval(candidates.data() + k * dim), candidates.data() + k * dim, dim);
#endif
    return global;
}

// Candidate centres for the exact planar scan: the points themselves plus
// both centres of radius-(ra,rb) circles through each close-enough pair.
void planar_pair_centres(const double* p, const double* q, double ra, double rb,
                         std::vector<double>& out) {
    const double dx = q[0] - p[0];
    const double dy = q[1] - p[1];
    const double d2 = dx * dx + dy * dy;
    if (d2 == 0.0) return;
    const double d = std::sqrt(d2);
    if (d > (ra + rb) * (1.0 + 1e-12)) return;
    if (d < std::fabs(ra - rb) * (1.0 - 1e-12)) return;
    // Intersect circles of radius ra around p and rb around q (touching
    // circles collapse to the single midpoint candidate).
    const double a = (d2 + ra * ra - rb * rb) / (2.0 * d);
    const double h2 = ra * ra - a * a;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const double bx = p[0] + a * dx / d;
    const double by = p[1] + a * dy / d;
    out.push_back(bx + h * dy / d);
    out.push_back(by - h * dx / d);
    out.push_back(bx - h * dy / d);
    out.push_back(by + h * dx / d);
}

ScanResult grid_scan(const rgg::PointCloud& points, const geometry::NormSpec& norm,
                     const std::vector<double>& radii, const std::vector<double>& coeff) {
    const int dim = points.dim;
    const double rmax = radii.back();
    const double h = rmax / 64.0;
    const double slack = 0.5 * h * geometry::unit_cube_diameter(norm);
    const rgg::SpatialGrid grid(points, rmax);

    // Candidate cells: the maximiser has a point within rmax, so grid centres
    // within rmax + slack of some point suffice.
    std::map<std::vector<std::int64_t>, bool> cells;
    const long long spread = static_cast<long long>(std::ceil(rmax / h)) + 1;
    std::vector<std::int64_t> key(dim);
    for (std::size_t i = 0; i < points.n; ++i) {
        const double* p = points.point(i);
        std::vector<long long> base(dim), off(dim, -spread);
        for (int j = 0; j < dim; ++j) base[j] = static_cast<long long>(std::floor(p[j] / h));
        for (;;) {
            for (int j = 0; j < dim; ++j) key[j] = base[j] + off[j];
            cells.emplace(key, true);
            int axis = 0;
            while (axis < dim && ++off[axis] > spread) off[axis++] = -spread;
            if (axis == dim) break;
        }
    }
    std::vector<double> candidates;
    candidates.reserve(cells.size() * dim);
    for (const auto& [coords, _] : cells)
        for (int j = 0; j < dim; ++j)
            candidates.push_back((static_cast<double>(coords[j]) + 0.5) * h);

    Best coarse = reduce_candidates(candidates, dim, [&](const double* x) {
        return weighted_count(grid, norm, x, radii, coeff);
    });

    // Upper bound: any centre is within half a cell diagonal of an evaluated
    // grid centre, and enlarging every radius by that much can only grow the
    // counts.
    std::vector<double> radii_up(radii);
    for (double& r : radii_up) r += slack;
    Best upper = reduce_candidates(candidates, dim, [&](const double* x) {
        return weighted_count(grid, norm, x, radii_up, coeff);
    });

    // One local refinement pass at h/8 around the best coarse centre.
    std::vector<double> fine;
    const double fh = h / 8.0;
    std::vector<long long> off(dim, -8);
    for (;;) {
        for (int j = 0; j < dim; ++j) fine.push_back(coarse.witness[j] + fh * off[j]);
        int axis = 0;
        while (axis < dim && ++off[axis] > 8) off[axis++] = -8;
        if (axis == dim) break;
    }
    Best refined = reduce_candidates(fine, dim, [&](const double* x) {
        return weighted_count(grid, norm, x, radii, coeff);
    });
    refined.merge(coarse, dim);

    ScanResult res;
    res.value = refined.value;
    res.witness = refined.witness;
    res.exact = false;
    res.gap = std::max(0.0, upper.value - refined.value);
    return res;
}

ScanResult exact_planar_scan(const rgg::PointCloud& points, const std::vector<double>& radii,
                             const std::vector<double>& coeff,
                             const geometry::NormSpec& norm) {
    const int dim = 2;
    const double rmax = radii.back();
    const rgg::SpatialGrid count_grid(points, rmax);
    const rgg::SpatialGrid pair_grid(points, 2.0 * rmax);

    std::vector<double> candidates;
    candidates.reserve(points.n * 2);
    for (std::size_t i = 0; i < points.n; ++i) {
        candidates.push_back(points.point(i)[0]);
        candidates.push_back(points.point(i)[1]);
    }
    std::vector<std::uint32_t> close;
    for (std::size_t i = 0; i < points.n; ++i) {
        const double* p = points.point(i);
        pair_grid.collect_within(norm, p, 2.0 * rmax, close);
        for (std::uint32_t j : close) {
            if (j <= i) continue;
            for (double ra : radii)
                for (double rb : radii)
                    planar_pair_centres(p, points.point(j), ra, rb, candidates);
        }
    }

    // Candidate centres put points exactly on circle boundaries; the closed
    // balls are evaluated with a 1e-12 relative inflation so roundoff in the
    // centre coordinates cannot drop a boundary point (symmetric tie
    // inclusion).
    std::vector<double> radii_eval(radii);
    for (double& r : radii_eval) r *= 1.0 + 1e-12;
    Best best = reduce_candidates(candidates, dim, [&](const double* x) {
        return weighted_count(count_grid, norm, x, radii_eval, coeff);
    });

    ScanResult res;
    res.value = best.value;
    res.witness = best.witness;
    res.exact = true;
    res.gap = 0.0;
    return res;
}

ScanResult run_scan(const rgg::PointCloud& points, const geometry::NormSpec& norm,
                    const std::vector<double>& radii, const std::vector<double>& coeff) {
    if (points.dim != norm.dim)
        throw std::invalid_argument("cloud dimension does not match norm dimension");
    ScanResult res;
    if (points.n == 0) {
        res.witness.assign(points.dim, 0.0);
        res.exact = true;
        return res;
    }
    if (geometry::is_euclidean(norm) && points.dim == 2)
        return exact_planar_scan(points, radii, coeff, norm);
    return grid_scan(points, norm, radii, coeff);
}

} // namespace

ScanResult scan_ball(const rgg::PointCloud& points, double rho, const geometry::NormSpec& norm) {
    if (!(rho > 0.0)) throw std::invalid_argument("scan_ball requires rho > 0");
    return run_scan(points, norm, {rho}, {1.0});
}

ScanResult scan_radial(const rgg::PointCloud& points, const limits::RadialLevels& phi,
                       double r) {
    if (!(r > 0.0)) throw std::invalid_argument("scan_radial requires r > 0");
    phi.validate();
    std::vector<double> radii, coeff;
    for (std::size_t k = 0; k < phi.rings.size(); ++k) {
        radii.push_back(r * phi.rings[k].outer_radius);
        const double next = k + 1 < phi.rings.size() ? phi.rings[k + 1].value : 0.0;
        coeff.push_back(phi.rings[k].value - next);
    }
    return run_scan(points, phi.norm, radii, coeff);
}

double expected_scan(const limits::FunctionProfile& phi, double n, double r, int d,
                     double sigma, double t) {
    if (!(n > 0.0) || !(r > 0.0) || !(sigma > 0.0) || d < 1)
        throw std::invalid_argument("expected_scan requires n, r, sigma > 0 and d >= 1");
    return sigma * n * std::pow(r, d) * limits::xi(phi, t);
}

} // namespace rgglab::scan
