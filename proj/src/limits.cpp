#include "rgglab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rgglab::limits {

double H(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("H(x) requires x > 0");
    if (x == 1.0) return 0.0;
    return x * std::log(x) - x + 1.0;
}

namespace {

// Bracketed bisection to a 1e-13 relative interval, then a fixed number of
// Newton steps.  `f` must be increasing on [lo, hi] with f(lo) <= 0 <= f(hi).
template <class F, class DF>
double polish_root(F f, DF df, double lo, double hi) {
    for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, std::fabs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 3; ++it) {
        const double fx = f(x);
        const double dfx = df(x);
        if (!std::isfinite(fx) || !std::isfinite(dfx) || dfx <= 0.0) break;
        const double next = x - fx / dfx;
        if (next >= lo && next <= hi) x = next;
    }
    return x;
}

} // namespace

double solve_c(double w, double t) {
    if (!(w > 0.0))
        throw std::invalid_argument("solve_c requires w > 0");
    if (!(t > 0.0))
        throw std::invalid_argument("solve_c requires t > 0");
    if (std::isinf(t)) return w;

    // Solve H(y) = 1/(w t) for y >= 1, then rescale.
    const double target = 1.0 / (w * t);
    auto f = [&](double y) { return H(y) - target; };
    auto df = [](double y) { return std::log(y); };

    double hi = 2.0;
    int guard = 0;
    while (H(hi) < target) {
        hi *= 2.0;
        if (++guard > 1100)
            throw std::runtime_error("solve_c failed to bracket the root");
    }
    const double y = polish_root(f, df, 1.0, hi);
    return w * y;
}

double weighting_value(const FunctionProfile& phi, double t) {
    phi.validate();
    if (!(t > 0.0) || std::isinf(t))
        throw std::invalid_argument("weighting_value requires finite t > 0");
    const double target = 1.0 / t;
    auto f = [&](double s) {
        double acc = 0.0;
        for (const auto& l : phi.levels) {
            const double e = std::exp(s * l.value);
            acc += l.volume * (e * (s * l.value) - e + 1.0); // H(e^{s a})
        }
        return acc - target;
    };
    auto df = [&](double s) {
        double acc = 0.0;
        for (const auto& l : phi.levels)
            acc += l.volume * s * l.value * l.value * std::exp(s * l.value);
        return acc;
    };

    double hi = 1.0;
    int guard = 0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 1100)
            throw std::runtime_error("weighting_value failed to bracket the root");
    }
    return polish_root(f, df, 0.0, hi);
}

double xi(const FunctionProfile& phi, double t) {
    phi.validate();
    if (std::isinf(t)) return phi.integral();
    const double s = weighting_value(phi, t);
    double acc = 0.0;
    for (const auto& l : phi.levels) acc += l.value * std::exp(s * l.value) * l.volume;
    return acc;
}

double f_clique(double t, const geometry::NormSpec& norm) {
    const double w = geometry::unit_ball_volume(norm) / std::pow(2.0, norm.dim);
    return solve_c(w, t);
}

BoundPair f_chromatic_bounds(double t, const geometry::NormSpec& norm,
                             const FeasibleCatalog& catalog,
                             std::optional<double> user_delta) {
    if (!(t > 0.0))
        throw std::invalid_argument("f_chromatic_bounds requires t > 0");
    const double delta = geometry::packing_density(norm, user_delta).delta;
    const double w = geometry::unit_ball_volume(norm) / (std::pow(2.0, norm.dim) * delta);
    BoundPair out;
    out.upper = solve_c(w, t);
    out.lower = 0.0;
    for (const auto& entry : catalog.entries)
        out.lower = std::max(out.lower, xi(entry.profile, t));
    return out;
}

double mu_beta(double beta, double t, const geometry::NormSpec& norm) {
    return xi(phi_beta_profile(norm, beta), t);
}

BoundPair f_ratio_bounds(double t, const geometry::NormSpec& norm,
                         const FeasibleCatalog& catalog, std::optional<double> user_delta) {
    const double fc = f_clique(t, norm);
    const BoundPair chi = f_chromatic_bounds(t, norm, catalog, user_delta);
    return {chi.lower / fc, chi.upper / fc};
}

ThresholdBracket bracket_t0(const geometry::NormSpec& norm, const FeasibleCatalog& catalog,
                            std::span<const double> t_grid,
                            std::optional<double> user_delta) {
    const double delta = geometry::packing_density(norm, user_delta).delta;
    if (delta >= 1.0)
        throw std::invalid_argument("threshold undefined: packing density is 1, so the ratio "
                                    "of the limits is identically 1");
    if (t_grid.empty())
        throw std::invalid_argument("bracket_t0 requires a nonempty t grid");

    ThresholdBracket out;
    for (double t : t_grid) {
        double lower = 0.0;
        for (const auto& entry : catalog.entries)
            lower = std::max(lower, xi(entry.profile, t));
        const double gap = lower - f_clique(t, norm);
        if (gap <= 1e-9) {
            if (!out.t_hi) out.t_lo = t;
        } else if (gap > 1e-6 && !out.t_hi) {
            out.t_hi = t;
        }
    }
    out.separation_found = out.t_hi.has_value();
    return out;
}

double sparse_level(double n, double nrd) {
    const double ln_n = std::log(n);
    if (!(nrd > 0.0) || !(nrd < ln_n))
        throw std::invalid_argument("sparse_level requires 0 < n r^d < ln n");
    return ln_n / std::log(ln_n / nrd);
}

int very_sparse_level(double n, double r, int d) {
    if (!(n >= 2.0) || !(r > 0.0) || d < 1)
        throw std::invalid_argument("very_sparse_level requires n >= 2, r > 0, d >= 1");
    const double nrd = n * std::pow(r, d);
    if (!(nrd < 1.0))
        throw std::invalid_argument("very_sparse_level requires n r^d < 1");
    // n r^d = n^{-1/z} with z below; the level bands are half-integer z.
    const double z = std::log(n) / (-std::log(nrd));
    return static_cast<int>(std::floor(z + 0.5));
}

PoissonTailBounds poisson_tail_bounds(double mu, double k) {
    if (!(mu > 0.0))
        throw std::invalid_argument("poisson_tail_bounds requires mu > 0");
    if (!(k >= mu))
        throw std::invalid_argument("upper-tail bounds require k >= mu");
    PoissonTailBounds out;
    out.chernoff_upper = std::exp(-mu * H(k / mu));
    out.elementary_lower = std::exp(k * std::log(mu / (M_E * k)));
    out.elementary_upper = std::exp(k * std::log(M_E * mu / k));
    return out;
}

const char* regime_name(Regime kind) {
    switch (kind) {
    case Regime::VerySparse: return "very-sparse";
    case Regime::Sparse: return "sparse";
    case Regime::Intermediate: return "intermediate";
    case Regime::Dense: return "dense";
    }
    return "?";
}

RegimeLabel classify_regime(double n, double r, int d, double sigma) {
    if (!(n >= 2.0) || !(r > 0.0) || !(sigma > 0.0) || d < 1)
        throw std::invalid_argument("classify_regime requires n >= 2, r > 0, sigma > 0");
    const double nrd = n * std::pow(r, d);
    const double t = sigma * nrd / std::log(n);
    RegimeLabel label{Regime::Sparse, t};
    if (nrd <= std::pow(n, -0.1))
        label.kind = Regime::VerySparse;
    else if (t >= 100.0)
        label.kind = Regime::Dense;
    else if (t >= 0.01)
        label.kind = Regime::Intermediate;
    else
        label.kind = Regime::Sparse;
    return label;
}

} // namespace rgglab::limits
