#pragma once

#include <optional>
#include <span>

namespace rgglab::geometry {

// A p-norm on R^d.  p = +infinity selects the max norm.
struct NormSpec {
    double p = 2.0;
    int dim = 2;
};

bool is_linf(const NormSpec& norm);
bool is_euclidean(const NormSpec& norm);

// ||v||_p.  Throws std::invalid_argument on dimension mismatch or p < 1.
double norm_eval(const NormSpec& norm, std::span<const double> v);

// Distance helpers used by the neighbour-search kernels.
double distance(const NormSpec& norm, std::span<const double> a, std::span<const double> b);
bool distance_le(const NormSpec& norm, const double* a, const double* b, double r);

// Volume of the unit ball, (2*Gamma(1/p+1))^d / Gamma(d/p+1).
double unit_ball_volume(const NormSpec& norm);

// ||(1,...,1)||, the diameter of the unit cube in this norm.
double unit_cube_diameter(const NormSpec& norm);

enum class DeltaSource { ExactKnown, UserSupplied, VolumeUpperBound };

struct PackingInfo {
    double delta = 1.0; // translational packing density of the unit ball, in (0,1]
    DeltaSource source = DeltaSource::ExactKnown;
};

// Registry of rigorously known packing densities: every norm in d=1,
// Euclidean d=2 (pi/(2*sqrt(3))) and d=3 (pi/sqrt(18)), and the max norm in
// any dimension (the cube tiles space).  Anything else requires an explicit
// user value; otherwise throws std::invalid_argument ("packing density
// unavailable").
PackingInfo packing_density(const NormSpec& norm,
                            std::optional<double> user_delta = std::nullopt);

// Sound upper bound on the maximum cardinality of a 1-separated point set in
// (0,K)^d: min of the volume bound floor((K+1)^d 2^d / vol(B)) and the
// covering bound (floor(K*rho)+1)^d with rho = ||(1,..,1)||, i.e. the number
// of grid cells of diameter < 1 needed to cover the cube.
long long separated_count_upper(const NormSpec& norm, double K);

// Number k of diameter-<=1 sets that cover the unit ball (grid cells), so
// that chi(G) <= k * omega(G) for every geometric graph over this norm.
long long covering_count(const NormSpec& norm);

} // namespace rgglab::geometry
