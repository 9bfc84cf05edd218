#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rgglab/geometry.hpp"

namespace rgglab::limits {

// One level of a simple function: it takes `value` on a set of measure
// `volume`.
struct ProfileLevel {
    double value = 0.0;
    double volume = 0.0;
};

// A nonnegative simple function sum_i a_i 1_{A_i} with disjoint A_i, recorded
// as (a_i, vol(A_i)) pairs.  Values are positive and pairwise distinct.
struct FunctionProfile {
    std::vector<ProfileLevel> levels;

    double integral() const;
    double max_value() const;
    void validate() const; // throws std::invalid_argument
};

// Pointwise sum of two profiles with disjoint supports: levels are
// concatenated, merging exactly equal values.
FunctionProfile profile_concat(const FunctionProfile& a, const FunctionProfile& b);

// A radial simple function: value `rings[i].value` on the annulus between
// rings[i-1].outer_radius and rings[i].outer_radius (radius 0 inside).
// Outer radii strictly increase, values strictly decrease and are positive.
struct Ring {
    double outer_radius = 0.0;
    double value = 0.0;
};

struct RadialLevels {
    geometry::NormSpec norm;
    std::vector<Ring> rings;

    FunctionProfile to_profile() const;
    double max_radius() const;
    // Value at distance `rho` from the centre (closed outer boundaries).
    double value_at(double rho) const;
    void validate() const;
};

// phi_0: the indicator of the ball of radius 1/2.  Any 1-separated set meets
// it at most once, so it is dual feasible.
RadialLevels phi_zero(const geometry::NormSpec& norm);

// phi_beta: 1 on the ball of radius (1-beta)/2, 1/2 out to radius (1+beta)/2.
// Feasibility needs two facts: the inner ball plus a 1/2-ring point would be
// two points at distance < 1, and the outer ball must not admit three points
// that are pairwise more than 1 apart.  The latter holds exactly when
// (1+beta)/2 does not exceed the minimum enclosing radius of such a triple:
//   d = 1            -> every beta in [0,1]
//   Euclidean, d >= 2 -> beta <= 2/sqrt(3) - 1  (equilateral triangle)
//   other norms       -> only beta = 0 is certified here
double phi_beta_feasible_max(const geometry::NormSpec& norm);

// Returns phi_beta when the feasibility certificate above applies, otherwise
// nullopt.
std::optional<RadialLevels> phi_beta(const geometry::NormSpec& norm, double beta);

// Profile of phi_beta (defined for every beta in [0,1]; used by mu_beta
// independently of feasibility).
FunctionProfile phi_beta_profile(const geometry::NormSpec& norm, double beta);

enum class Certificate {
    HalfBall,         // phi_0
    TwoLevelTriangle, // phi_beta within the certified range
    CubeCounting,     // 1/N on (0,K)^d with N a sound 1-separated upper count
};

struct CatalogEntry {
    std::string name;
    FunctionProfile profile;
    std::optional<RadialLevels> radial; // present for radial entries
    Certificate certificate = Certificate::HalfBall;
};

// A catalog of certified dual-feasible functions: sum_{v in S} phi(v) <= 1
// for every 1-separated S.  Immutable after construction.
struct FeasibleCatalog {
    std::vector<CatalogEntry> entries;
};

// Ships phi_0, phi_beta on a 64-point beta grid (those within the certified
// range), and cube functions for K in {1,2,4,8}.
FeasibleCatalog standard_catalog(const geometry::NormSpec& norm);

} // namespace rgglab::limits
