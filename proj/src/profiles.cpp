#include "rgglab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rgglab::limits {

double FunctionProfile::integral() const {
    double s = 0.0;
    for (const auto& l : levels) s += l.value * l.volume;
    return s;
}

double FunctionProfile::max_value() const {
    double m = 0.0;
    for (const auto& l : levels) m = std::max(m, l.value);
    return m;
}

void FunctionProfile::validate() const {
    if (levels.empty())
        throw std::invalid_argument("profile has no levels");
    for (const auto& l : levels) {
        if (!(l.value > 0.0) || !std::isfinite(l.value))
            throw std::invalid_argument("profile level values must be positive and finite");
        if (!(l.volume > 0.0) || !std::isfinite(l.volume))
            throw std::invalid_argument("profile level volumes must be positive and finite");
    }
    for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j)
            if (levels[i].value == levels[j].value)
                throw std::invalid_argument("profile level values must be distinct");
    const double total = integral();
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::invalid_argument("profile integral must be positive and finite");
}

FunctionProfile profile_concat(const FunctionProfile& a, const FunctionProfile& b) {
    FunctionProfile out = a;
    for (const auto& l : b.levels) {
        auto it = std::find_if(out.levels.begin(), out.levels.end(),
                               [&](const ProfileLevel& m) { return m.value == l.value; });
        if (it != out.levels.end())
            it->volume += l.volume;
        else
            out.levels.push_back(l);
    }
    return out;
}

FunctionProfile RadialLevels::to_profile() const {
    validate();
    const double ball = geometry::unit_ball_volume(norm);
    FunctionProfile p;
    double prev = 0.0;
    for (const auto& ring : rings) {
        const double vol =
            ball * (std::pow(ring.outer_radius, norm.dim) - std::pow(prev, norm.dim));
        p.levels.push_back({ring.value, vol});
        prev = ring.outer_radius;
    }
    p.validate();
    return p;
}

double RadialLevels::max_radius() const {
    return rings.empty() ? 0.0 : rings.back().outer_radius;
}

double RadialLevels::value_at(double rho) const {
    double prev = 0.0;
    for (const auto& ring : rings) {
        if (rho > prev && rho <= ring.outer_radius) return ring.value;
        prev = ring.outer_radius;
    }
    if (rho == 0.0 && !rings.empty()) return rings.front().value;
    return 0.0;
}

void RadialLevels::validate() const {
    if (rings.empty())
        throw std::invalid_argument("radial function has no rings");
    double prev_r = 0.0;
    double prev_v = std::numeric_limits<double>::infinity();
    for (const auto& ring : rings) {
        if (!(ring.outer_radius > prev_r))
            throw std::invalid_argument("ring radii must strictly increase");
        if (!(ring.value > 0.0) || !(ring.value < prev_v))
            throw std::invalid_argument("ring values must be positive and strictly decrease");
        prev_r = ring.outer_radius;
        prev_v = ring.value;
    }
}

RadialLevels phi_zero(const geometry::NormSpec& norm) {
    return RadialLevels{norm, {{0.5, 1.0}}};
}

double phi_beta_feasible_max(const geometry::NormSpec& norm) {
    if (norm.dim == 1) return 1.0;
    if (geometry::is_euclidean(norm)) return 2.0 / std::sqrt(3.0) - 1.0;
    return 0.0;
}

std::optional<RadialLevels> phi_beta(const geometry::NormSpec& norm, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta must lie in [0,1]");
    if (beta > phi_beta_feasible_max(norm)) return std::nullopt;
    RadialLevels f{norm, {}};
    if (beta == 0.0) {
        f.rings = {{0.5, 1.0}};
    } else if (beta == 1.0) {
        f.rings = {{1.0, 0.5}};
    } else {
        f.rings = {{(1.0 - beta) / 2.0, 1.0}, {(1.0 + beta) / 2.0, 0.5}};
    }
    return f;
}

FunctionProfile phi_beta_profile(const geometry::NormSpec& norm, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta must lie in [0,1]");
    const double half_ball = geometry::unit_ball_volume(norm) / std::pow(2.0, norm.dim);
    const double inner = std::pow(1.0 - beta, norm.dim) * half_ball;
    const double outer = std::pow(1.0 + beta, norm.dim) * half_ball - inner;
    FunctionProfile p;
    if (inner > 0.0) p.levels.push_back({1.0, inner});
    if (outer > 0.0) p.levels.push_back({0.5, outer});
    p.validate();
    return p;
}

FeasibleCatalog standard_catalog(const geometry::NormSpec& norm) {
    FeasibleCatalog cat;
    {
        RadialLevels f = phi_zero(norm);
        cat.entries.push_back({"phi0", f.to_profile(), f, Certificate::HalfBall});
    }
    for (int k = 1; k <= 64; ++k) {
        const double beta = static_cast<double>(k) / 64.0;
        auto f = phi_beta(norm, beta);
        if (!f) break; // grid is increasing, later betas fail too
        cat.entries.push_back({"phi_beta_" + std::to_string(k) + "/64", f->to_profile(), *f,
                               Certificate::TwoLevelTriangle});
    }
    for (double K : {1.0, 2.0, 4.0, 8.0}) {
        const long long count = geometry::separated_count_upper(norm, K);
        FunctionProfile p;
        p.levels.push_back({1.0 / static_cast<double>(count), std::pow(K, norm.dim)});
        cat.entries.push_back({"cube_K" + std::to_string(static_cast<int>(K)), p, std::nullopt,
                               Certificate::CubeCounting});
    }
    return cat;
}

} // namespace rgglab::limits
