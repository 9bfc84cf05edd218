#pragma once

#include <limits>
#include <optional>
#include <span>

#include "rgglab/profiles.hpp"

namespace rgglab::limits {

// t = +infinity is a distinguished case throughout (the weighting value is 0
// and all weighted integrals reduce to plain integrals).
inline constexpr double t_infinity = std::numeric_limits<double>::infinity();

// H(x) = x ln x - x + 1 for x > 0.  H(1) = 0, strictly decreasing on (0,1),
// strictly increasing on (1,inf).
double H(double x);

// c(w,t): the unique x >= w with H(x/w) = 1/(wt); c(w,inf) = w.
// Relative accuracy 1e-12 on the bracketed root.
double solve_c(double w, double t);

// The weighting value s(phi,t) >= 0 solving sum_i v_i H(e^{s a_i}) = 1/t.
// Requires finite t > 0.
double weighting_value(const FunctionProfile& phi, double t);

// xi(phi,t) = sum_i a_i e^{s a_i} v_i with s = s(phi,t); xi(phi,inf) is the
// plain integral.
double xi(const FunctionProfile& phi, double t);

// Clique-number limit f_omega(t) = c(vol(B)/2^d, t).
double f_clique(double t, const geometry::NormSpec& norm);

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

// Chromatic-number limit f_chi(t), exposed as a pair: the lower bound is the
// best catalog value max_phi xi(phi,t), the upper bound is c(vol(B)/(2^d
// delta), t).  Requires a known (or user-supplied) packing density.
BoundPair f_chromatic_bounds(double t, const geometry::NormSpec& norm,
                             const FeasibleCatalog& catalog,
                             std::optional<double> user_delta = std::nullopt);

// mu(beta) = xi(phi_beta, t) for beta in [0,1] (independent of feasibility).
double mu_beta(double beta, double t, const geometry::NormSpec& norm);

// f_rat(t) = f_chi(t)/f_omega(t), bounded by the pair above divided by
// f_omega.  The lower bound is always >= 1.
BoundPair f_ratio_bounds(double t, const geometry::NormSpec& norm,
                         const FeasibleCatalog& catalog,
                         std::optional<double> user_delta = std::nullopt);

struct ThresholdBracket {
    // Largest grid t at which the catalog lower bound still equals f_omega
    // (within 1e-9); absent when separation is already visible at the first
    // grid point.
    std::optional<double> t_lo;
    // Smallest grid t at which the catalog lower bound exceeds f_omega by
    // more than 1e-6; absent when the catalog never separates.
    std::optional<double> t_hi;
    bool separation_found = false;
};

// Brackets the threshold t0 = inf{t : f_rat(t) != 1} as far as the catalog
// can witness it.  Throws std::invalid_argument when delta = 1 (the ratio is
// identically 1 and no threshold exists).
ThresholdBracket bracket_t0(const geometry::NormSpec& norm, const FeasibleCatalog& catalog,
                            std::span<const double> t_grid,
                            std::optional<double> user_delta = std::nullopt);

// Sparse-regime level ln n / ln(ln n / nrd); requires 0 < nrd < ln n.
double sparse_level(double n, double nrd);

// Very-sparse level: the unique k >= 0 with n^{-1/(k-1/2)} <= nr^d <
// n^{-1/(k+1/2)} (k = 0 below n^{-2}).  Requires nr^d < 1.
int very_sparse_level(double n, double r, int d);

struct PoissonTailBounds {
    double chernoff_upper = 0.0;    // e^{-mu H(k/mu)}
    double elementary_lower = 0.0;  // (mu/(e k))^k
    double elementary_upper = 0.0;  // (e mu / k)^k
};

// Upper-tail bounds for P(Po(mu) >= k); requires k >= mu > 0.
PoissonTailBounds poisson_tail_bounds(double mu, double k);

enum class Regime { VerySparse, Sparse, Intermediate, Dense };

struct RegimeLabel {
    Regime kind = Regime::Sparse;
    double t = 0.0; // sigma n r^d / ln n
};

const char* regime_name(Regime kind);

// Concrete cutoffs for the four asymptotic regimes: very sparse when
// nr^d <= n^{-0.1}; otherwise by t = sigma n r^d / ln n with dense at
// t >= 100, intermediate for t in [0.01, 100), sparse below.
RegimeLabel classify_regime(double n, double r, int d, double sigma);

} // namespace rgglab::limits
