#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rgglab/graph.hpp"
#include "rgglab/profiles.hpp"

namespace rgglab::graphkit {

struct CliqueResult {
    int size = 0;
    std::vector<std::uint32_t> witness; // pairwise adjacent, sorted
};

// Exact maximum clique.  Branch and bound with a greedy-colouring pruning
// bound, run per grid-cell subproblem: every clique lies within distance r of
// each of its members, so it is contained in the ball of radius
// r + (cell diameter)/2 around the cell of any member.  Deterministic value
// and witness.
CliqueResult clique_number(const rgg::GeometricGraph& g);

enum class ColouringMethod { Exact, Greedy, GridLp };

struct ColouringResult {
    std::vector<int> colour;  // per vertex, 0-based
    int palette = 0;          // number of distinct colours used
    ColouringMethod method = ColouringMethod::Greedy;
};

bool is_proper_colouring(const rgg::GeometricGraph& g, const ColouringResult& c);

struct ExactChromatic {
    int chi = 0;
    ColouringResult colouring;
};

// Exact chromatic number by DSATUR branch and bound over connected
// components, seeded with the clique lower bound and a greedy upper bound.
// Fast paths: Delta = omega - 1 forces chi = omega; triangle-free components
// are handled by a bipartiteness test.  Returns nullopt when the node budget
// is exhausted ("exact unavailable, use bounds").
std::optional<ExactChromatic> chromatic_number_exact(const rgg::GeometricGraph& g,
                                                     long long node_budget = 40'000'000);

struct ChromaticBoundsOptions {
    // Largest n for which the phi_0 ball scan is run for the lower bound.
    std::size_t scan_budget = 20000;
    // Largest n for which the two-level radial catalog entries are scanned.
    std::size_t radial_scan_budget = 600;
    // Reuses a precomputed scan_ball(points, r/2) value when the caller
    // already has one.
    std::optional<double> phi0_scan_hint;
};

struct ChromaticBounds {
    int lower = 0;         // max of greedy clique and ceil(dual scan values)
    int upper = 0;         // best greedy palette
    ColouringResult greedy; // the colouring realising `upper`
};

ChromaticBounds chromatic_bounds(const rgg::GeometricGraph& g,
                                 const ChromaticBoundsOptions& opt = {});

struct FractionalSolution {
    std::vector<std::pair<std::vector<std::uint32_t>, double>> cover; // stable set, weight
    double objective = 0.0;      // sum of weights
    std::vector<double> dual;    // vertex weights, every stable set total <= 1 + tol
    double dual_objective = 0.0; // sum of dual weights
    double gap = 0.0;            // objective - dual_objective
};

// Fractional chromatic number by column generation: restricted covering LP
// over a growing stable-set pool, priced by an exact max-weight stable set
// search.  Terminates when no stable set has dual weight > 1 + tol/(2n) and
// returns primal and dual certificates with gap <= tol.
FractionalSolution fractional_chromatic(const rgg::GeometricGraph& g, double tol = 1e-6);

// M_phi of the points scaled by 1/r: a valid lower bound on chi_f for any
// certified feasible phi.
double dual_bound(const rgg::PointCloud& points, double r, const geometry::NormSpec& norm,
                  const limits::RadialLevels& phi);

struct GridLpResult {
    ColouringResult colouring;
    double guarantee_value = 0.0;   // the colouring-lemma bound from this run
    double max_translate_sum = 0.0; // largest windowed dual translate sum
    int windows_solved = 0;
    int shifts = 0;
    int window_cells = 0; // (2K)^d
};

// Constructive colouring through the shifted-window cell LPs: partition into
// cells of side eps*r, solve the covering LP of each 2K-cell window with
// demands scaled by (2K)^d, round up the basic solutions, and combine the
// (2K+L)^d shifts with disjoint palettes.  The reported guarantee value is
// (1+L/2K)^d * max window translate-sum + (2K)^{2d} (1+L/2K)^d, and the
// palette never exceeds it.
GridLpResult grid_lp_colouring(const rgg::PointCloud& points, double r,
                               const geometry::NormSpec& norm, double eps, int K,
                               std::size_t stable_set_budget = 200000);

} // namespace rgglab::graphkit
