#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace rgglab::rgg {

// A probability density on [0,1]^d: either the uniform density or a
// piecewise-constant density on a regular grid partition.
struct DensityModel {
    enum class Kind { UniformCube, BlockDensity };

    Kind kind = Kind::UniformCube;
    int dim = 2;
    int grid = 1;                     // cells per axis (block model)
    std::vector<double> cell_density; // grid^dim values, row-major

    static DensityModel uniform_cube(int dim);
    static DensityModel block(int dim, int grid, std::vector<double> density);

    double sigma() const; // essential sup of the density
    void validate() const; // throws unless the density integrates to 1 (1e-12)
};

struct PointCloud {
    int dim = 2;
    std::size_t n = 0;
    std::vector<double> coords; // n * dim, row-major
    std::uint64_t seed = 0;
    double sigma = 1.0;

    const double* point(std::size_t i) const { return coords.data() + i * dim; }
    std::span<const double> point_span(std::size_t i) const {
        return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
    }
};

// Deterministic sampling from (model, n, seed).  Uniform model: point i
// consumes draws i*d .. i*d+d-1, one per coordinate.  Block model: point i
// consumes draws i*(d+1) .. i*(d+1)+d, the first selecting a cell by mass and
// the rest placing the point uniformly inside it.
PointCloud sample_points(const DensityModel& model, std::size_t n, std::uint64_t seed);

// r with sigma n r^d / ln n = t exactly.
double radius_for_t(double n, double t, double sigma, int d);

// Text format: header "d n seed sigma", then n coordinate rows, shortest
// round-trip float formatting.
void write_cloud(std::ostream& out, const PointCloud& cloud);
PointCloud read_cloud(std::istream& in);

} // namespace rgglab::rgg
