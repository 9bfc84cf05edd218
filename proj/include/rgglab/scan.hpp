#pragma once

#include <vector>

#include "rgglab/cloud.hpp"
#include "rgglab/geometry.hpp"
#include "rgglab/profiles.hpp"

namespace rgglab::scan {

struct ScanResult {
    double value = 0.0;          // the achieved maximum translate sum
    std::vector<double> witness; // maximising centre
    bool exact = false;
    double gap = 0.0;            // certified slack of the upper bound when approximate
};

// M_W for W a ball of radius rho: the maximum number of points in any closed
// ball of radius rho.  Exact for the Euclidean plane (candidate centres are
// the points themselves plus, for every pair within 2 rho, both centres of
// the radius-rho circles through the pair); elsewhere a certified grid
// search.  Witness ties break to the lexicographically smallest centre.
ScanResult scan_ball(const rgg::PointCloud& points, double rho,
                     const geometry::NormSpec& norm);

// Generalised scan M_phi for a radial simple function phi, with distances
// scaled by r: max over x of sum_i (a_i - a_{i+1}) |{p : ||p-x|| <= r rho_i}|.
// Exact in the Euclidean plane via the circle arrangement (candidates are all
// circle-circle intersections plus the points); otherwise grid search with a
// certified gap.
ScanResult scan_radial(const rgg::PointCloud& points, const limits::RadialLevels& phi,
                       double r);

// Predicted scan value sigma n r^d xi(phi, t) for comparison with empirical
// scans.
double expected_scan(const limits::FunctionProfile& phi, double n, double r, int d,
                     double sigma, double t);

} // namespace rgglab::scan
