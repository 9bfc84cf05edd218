#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rgglab/cloud.hpp"
#include "rgglab/geometry.hpp"

namespace rgglab::rgg {

// Geometric graph: vertices are the cloud points, i ~ j iff
// ||X_i - X_j|| <= r (closed threshold) and i != j.  Adjacency is stored as
// CSR with sorted neighbour lists; immutable after construction.
struct GeometricGraph {
    PointCloud cloud;
    double r = 0.0;
    geometry::NormSpec norm;
    std::vector<std::size_t> offsets;      // n + 1
    std::vector<std::uint32_t> neighbors;  // sorted within each row

    std::size_t num_vertices() const { return cloud.n; }
    std::size_t num_edges() const { return neighbors.size() / 2; }
    std::span<const std::uint32_t> neighbors_of(std::size_t i) const {
        return {neighbors.data() + offsets[i], neighbors.data() + offsets[i + 1]};
    }
    std::size_t degree(std::size_t i) const { return offsets[i + 1] - offsets[i]; }
    std::size_t max_degree() const;
    bool adjacent(std::uint32_t i, std::uint32_t j) const;
};

// Grid-bucketed neighbour search: points are bucketed into cells of side r
// and only neighbouring cells are compared.  Parallelised per vertex; output
// is independent of scheduling.
GeometricGraph build_graph(PointCloud cloud, double r, const geometry::NormSpec& norm);

// Serial all-pairs reference, kept for testing and benchmarking.
GeometricGraph build_graph_reference(PointCloud cloud, double r,
                                     const geometry::NormSpec& norm);

// Edge-list text format: header "n m", then m rows "i j" (0-based, i < j).
void write_edge_list(std::ostream& out, const GeometricGraph& g);

// Vertex sets of the connected components.
std::vector<std::vector<std::uint32_t>> connected_components(const GeometricGraph& g);

} // namespace rgglab::rgg
