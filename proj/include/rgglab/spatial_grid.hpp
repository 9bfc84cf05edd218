#pragma once

#include <cstdint>
#include <vector>

#include "rgglab/cloud.hpp"
#include "rgglab/geometry.hpp"

namespace rgglab::rgg {

// Uniform bucketing of a point set into cells of a fixed side.  Cells are
// kept as a sorted list of integer coordinate tuples with point ranges, so
// lookups work for any dimension and any cell side without allocating a
// dense grid.
class SpatialGrid {
public:
    SpatialGrid(const PointCloud& cloud, double cell_side);

    // Indices of all points with ||p - x|| <= radius (closed ball).
    void collect_within(const geometry::NormSpec& norm, const double* x, double radius,
                        std::vector<std::uint32_t>& out) const;
    std::size_t count_within(const geometry::NormSpec& norm, const double* x,
                             double radius) const;

    double cell_side() const { return side_; }

    // Points sharing a cell with cell-coordinate tuple equal to that of point
    // `i` plus `offset`; empty when no such cell exists.
    std::pair<const std::uint32_t*, const std::uint32_t*>
    cell_range(const std::int64_t* cell_coords) const;

    const std::vector<std::int64_t>& point_cells() const { return point_cell_; }

private:
    const PointCloud& cloud_;
    double side_;
    int dim_;
    std::vector<std::int64_t> point_cell_;     // n * dim cell coords
    std::vector<std::uint32_t> order_;         // point ids sorted by cell
    std::vector<std::size_t> cell_start_;      // ranges into order_
    std::vector<std::int64_t> cell_coords_;    // unique cells, sorted, dim each

    std::size_t find_cell(const std::int64_t* coords) const; // npos when absent
};

} // namespace rgglab::rgg
