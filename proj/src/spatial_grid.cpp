#include "rgglab/spatial_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgglab::rgg {

namespace {

int compare_cells(const std::int64_t* a, const std::int64_t* b, int dim) {
    for (int j = 0; j < dim; ++j) {
        if (a[j] < b[j]) return -1;
        if (a[j] > b[j]) return 1;
    }
    return 0;
}

} // namespace

SpatialGrid::SpatialGrid(const PointCloud& cloud, double cell_side)
    : cloud_(cloud), side_(cell_side), dim_(cloud.dim) {
    if (!(cell_side > 0.0)) throw std::invalid_argument("cell side must be positive");
    const std::size_t n = cloud.n;
    point_cell_.resize(n * dim_);
    for (std::size_t i = 0; i < n; ++i) {
        const double* p = cloud.point(i);
        for (int j = 0; j < dim_; ++j)
            point_cell_[i * dim_ + j] = static_cast<std::int64_t>(std::floor(p[j] / side_));
    }

    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<std::uint32_t>(i);
    std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
        const int c = compare_cells(&point_cell_[a * dim_], &point_cell_[b * dim_], dim_);
        if (c != 0) return c < 0;
        return a < b;
    });

    for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t i = order_[k];
        if (k == 0 ||
            compare_cells(&point_cell_[i * dim_], &cell_coords_[cell_coords_.size() - dim_],
                          dim_) != 0) {
            cell_start_.push_back(k);
            cell_coords_.insert(cell_coords_.end(), &point_cell_[i * dim_],
                                &point_cell_[i * dim_] + dim_);
        }
    }
    cell_start_.push_back(n);
}

std::size_t SpatialGrid::find_cell(const std::int64_t* coords) const {
    const std::size_t num_cells = cell_start_.size() - 1;
    std::size_t lo = 0, hi = num_cells;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (compare_cells(&cell_coords_[mid * dim_], coords, dim_) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_cells && compare_cells(&cell_coords_[lo * dim_], coords, dim_) == 0)
        return lo;
    return static_cast<std::size_t>(-1);
}

std::pair<const std::uint32_t*, const std::uint32_t*>
SpatialGrid::cell_range(const std::int64_t* cell_coords) const {
    const std::size_t c = find_cell(cell_coords);
    if (c == static_cast<std::size_t>(-1))
        return {nullptr, nullptr};
    return {order_.data() + cell_start_[c], order_.data() + cell_start_[c + 1]};
}

void SpatialGrid::collect_within(const geometry::NormSpec& norm, const double* x,
                                 double radius, std::vector<std::uint32_t>& out) const {
    out.clear();
    if (cloud_.n == 0) return;
    // Points within `radius` of x differ from x by at most `radius` in every
    // coordinate, so one layer of neighbouring cells suffices while
    // radius <= side_.
    std::vector<std::int64_t> base(dim_), probe(dim_);
    for (int j = 0; j < dim_; ++j)
        base[j] = static_cast<std::int64_t>(std::floor(x[j] / side_));

    const long long spread = static_cast<long long>(std::ceil(radius / side_));
    std::vector<long long> off(dim_, -spread);
    for (;;) {
        for (int j = 0; j < dim_; ++j) probe[j] = base[j] + off[j];
        auto [begin, end] = cell_range(probe.data());
        for (const std::uint32_t* it = begin; it != end; ++it)
            if (geometry::distance_le(norm, cloud_.point(*it), x, radius)) out.push_back(*it);
        int axis = 0;
        while (axis < dim_ && ++off[axis] > spread) off[axis++] = -spread;
        if (axis == dim_) break;
    }
}

std::size_t SpatialGrid::count_within(const geometry::NormSpec& norm, const double* x,
                                      double radius) const {
    if (cloud_.n == 0) return 0;
    std::int64_t base_buf[8];
    std::int64_t probe_buf[8];
    std::vector<std::int64_t> base_big, probe_big;
    std::int64_t* base = base_buf;
    std::int64_t* probe = probe_buf;
    if (dim_ > 8) {
        base_big.resize(dim_);
        probe_big.resize(dim_);
        base = base_big.data();
        probe = probe_big.data();
    }
    for (int j = 0; j < dim_; ++j)
        base[j] = static_cast<std::int64_t>(std::floor(x[j] / side_));

    const long long spread = static_cast<long long>(std::ceil(radius / side_));
    std::size_t count = 0;
    std::vector<long long> off(dim_, -spread);
    for (;;) {
        for (int j = 0; j < dim_; ++j) probe[j] = base[j] + off[j];
        auto [begin, end] = cell_range(probe);
        for (const std::uint32_t* it = begin; it != end; ++it)
            if (geometry::distance_le(norm, cloud_.point(*it), x, radius)) ++count;
        int axis = 0;
        while (axis < dim_ && ++off[axis] > spread) off[axis++] = -spread;
        if (axis == dim_) break;
    }
    return count;
}

} // namespace rgglab::rgg
