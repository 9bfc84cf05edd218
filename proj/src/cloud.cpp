#include "rgglab/cloud.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rgglab/rng.hpp"

namespace rgglab::rgg {

DensityModel DensityModel::uniform_cube(int dim) {
    DensityModel m;
    m.kind = Kind::UniformCube;
    m.dim = dim;
    m.grid = 1;
    m.cell_density = {1.0};
    return m;
}

DensityModel DensityModel::block(int dim, int grid, std::vector<double> density) {
    DensityModel m;
    m.kind = Kind::BlockDensity;
    m.dim = dim;
    m.grid = grid;
    m.cell_density = std::move(density);
    m.validate();
    return m;
}

double DensityModel::sigma() const {
    if (kind == Kind::UniformCube) return 1.0;
    return *std::max_element(cell_density.begin(), cell_density.end());
}

void DensityModel::validate() const {
    if (dim < 1) throw std::invalid_argument("density model dimension must be >= 1");
    if (kind == Kind::UniformCube) return;
    if (grid < 1) throw std::invalid_argument("block model grid must be >= 1");
    std::size_t cells = 1;
    for (int i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(grid);
    if (cell_density.size() != cells)
        throw std::invalid_argument("block model needs grid^dim density values");
    double mass = 0.0;
    const double cell_vol = std::pow(1.0 / grid, dim);
    for (double v : cell_density) {
        if (!(v >= 0.0)) throw std::invalid_argument("density values must be nonnegative");
        mass += v * cell_vol;
    }
    if (std::fabs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("block model density must integrate to 1");
}

PointCloud sample_points(const DensityModel& model, std::size_t n, std::uint64_t seed) {
    model.validate();
    if (n < 1) throw std::invalid_argument("sample_points requires n >= 1");
    const int d = model.dim;

    PointCloud cloud;
    cloud.dim = d;
    cloud.n = n;
    cloud.seed = seed;
    cloud.sigma = model.sigma();
    cloud.coords.resize(n * static_cast<std::size_t>(d));

    const CounterRng rng{seed};

    if (model.kind == DensityModel::Kind::UniformCube) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            const std::uint64_t base = static_cast<std::uint64_t>(i) * d;
            for (int j = 0; j < d; ++j)
                cloud.coords[static_cast<std::size_t>(i) * d + j] = rng.unit(base + j);
        }
        return cloud;
    }

    // Cumulative cell masses in row-major order.
    const double cell_vol = std::pow(1.0 / model.grid, d);
    std::vector<double> cum(model.cell_density.size());
    double acc = 0.0;
    for (std::size_t c = 0; c < cum.size(); ++c) {
        acc += model.cell_density[c] * cell_vol;
        cum[c] = acc;
    }
    cum.back() = 1.0;

#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        const std::uint64_t base = static_cast<std::uint64_t>(i) * (d + 1);
        const double u = rng.unit(base);
        const std::size_t cell =
            std::lower_bound(cum.begin(), cum.end(), u) - cum.begin();
        // Decode the row-major cell index into per-axis coordinates.
        std::size_t rest = cell;
        for (int j = d - 1; j >= 0; --j) {
            const std::size_t cj = rest % model.grid;
            rest /= model.grid;
            const double frac = rng.unit(base + 1 + j);
            cloud.coords[static_cast<std::size_t>(i) * d + j] =
                (static_cast<double>(cj) + frac) / model.grid;
        }
    }
    return cloud;
}

double radius_for_t(double n, double t, double sigma, int d) {
    if (!(n >= 3.0) || !(t > 0.0) || !(sigma > 0.0) || d < 1)
        throw std::invalid_argument("radius_for_t requires n >= 3, t > 0, sigma > 0");
    return std::pow(t * std::log(n) / (sigma * n), 1.0 / d);
}

namespace {

void append_double(std::string& s, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    s.append(buf, res.ptr);
}

} // namespace

void write_cloud(std::ostream& out, const PointCloud& cloud) {
    std::string line;
    line += std::to_string(cloud.dim);
    line += ' ';
    line += std::to_string(cloud.n);
    line += ' ';
    line += std::to_string(cloud.seed);
    line += ' ';
    append_double(line, cloud.sigma);
    line += '\n';
    out << line;
    for (std::size_t i = 0; i < cloud.n; ++i) {
        line.clear();
        for (int j = 0; j < cloud.dim; ++j) {
            if (j) line += ' ';
            append_double(line, cloud.coords[i * cloud.dim + j]);
        }
        line += '\n';
        out << line;
    }
}

PointCloud read_cloud(std::istream& in) {
    PointCloud cloud;
    if (!(in >> cloud.dim >> cloud.n >> cloud.seed >> cloud.sigma))
        throw std::runtime_error("malformed cloud header; expected \"d n seed sigma\"");
    if (cloud.dim < 1) throw std::runtime_error("cloud dimension must be >= 1");
    cloud.coords.resize(cloud.n * static_cast<std::size_t>(cloud.dim));
    for (std::size_t k = 0; k < cloud.coords.size(); ++k)
        if (!(in >> cloud.coords[k]))
            throw std::runtime_error("cloud file ended before all coordinates were read");
    return cloud;
}

} // namespace rgglab::rgg
