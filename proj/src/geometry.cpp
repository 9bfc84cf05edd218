#include "rgglab/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgglab::geometry {

namespace {

void check_norm(const NormSpec& norm) {
    if (!(norm.p >= 1.0))
        throw std::invalid_argument("norm parameter p must be >= 1");
    if (norm.dim < 1)
        throw std::invalid_argument("dimension must be >= 1");
}

} // namespace

bool is_linf(const NormSpec& norm) { return std::isinf(norm.p); }

bool is_euclidean(const NormSpec& norm) { return norm.p == 2.0; }

double norm_eval(const NormSpec& norm, std::span<const double> v) {
    check_norm(norm);
    if (static_cast<int>(v.size()) != norm.dim)
        throw std::invalid_argument("vector length does not match norm dimension");
    if (is_linf(norm)) {
        double m = 0.0;
        for (double x : v) m = std::max(m, std::fabs(x));
        return m;
    }
    if (norm.p == 2.0) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return std::sqrt(s);
    }
    if (norm.p == 1.0) {
        double s = 0.0;
        for (double x : v) s += std::fabs(x);
        return s;
    }
    double s = 0.0;
    for (double x : v) s += std::pow(std::fabs(x), norm.p);
    return std::pow(s, 1.0 / norm.p);
}

double distance(const NormSpec& norm, std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("point dimension mismatch");
    double diff[8];
    std::vector<double> big;
    double* d = diff;
    if (a.size() > 8) {
        big.resize(a.size());
        d = big.data();
    }
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return norm_eval(norm, std::span<const double>(d, a.size()));
}

bool distance_le(const NormSpec& norm, const double* a, const double* b, double r) {
    const int d = norm.dim;
    if (norm.p == 2.0) {
        double s = 0.0;
        for (int i = 0; i < d; ++i) {
            const double t = a[i] - b[i];
            s += t * t;
        }
        return s <= r * r;
    }
    if (std::isinf(norm.p)) {
        for (int i = 0; i < d; ++i)
            if (std::fabs(a[i] - b[i]) > r) return false;
        return true;
    }
    if (norm.p == 1.0) {
        double s = 0.0;
        for (int i = 0; i < d; ++i) s += std::fabs(a[i] - b[i]);
        return s <= r;
    }
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += std::pow(std::fabs(a[i] - b[i]), norm.p);
    return s <= std::pow(r, norm.p);
}

double unit_ball_volume(const NormSpec& norm) {
    check_norm(norm);
    const int d = norm.dim;
    if (is_linf(norm)) return std::pow(2.0, d);
    if (norm.p == 1.0) {
        // 2^d / d!
        double v = 1.0;
        for (int i = 1; i <= d; ++i) v *= 2.0 / i;
        return v;
    }
    const double p = norm.p;
    return std::exp(d * (std::log(2.0) + std::lgamma(1.0 / p + 1.0)) -
                    std::lgamma(static_cast<double>(d) / p + 1.0));
}

double unit_cube_diameter(const NormSpec& norm) {
    check_norm(norm);
    if (is_linf(norm)) return 1.0;
    return std::pow(static_cast<double>(norm.dim), 1.0 / norm.p);
}

PackingInfo packing_density(const NormSpec& norm, std::optional<double> user_delta) {
    check_norm(norm);
    if (user_delta) {
        if (!(*user_delta > 0.0 && *user_delta <= 1.0))
            throw std::invalid_argument("packing density must lie in (0,1]");
        return {*user_delta, DeltaSource::UserSupplied};
    }
    // Every norm ball in d=1 is an interval, which tiles the line.
    if (norm.dim == 1) return {1.0, DeltaSource::ExactKnown};
    if (is_linf(norm)) return {1.0, DeltaSource::ExactKnown};
    if (norm.p == 2.0) {
        if (norm.dim == 2) return {M_PI / (2.0 * std::sqrt(3.0)), DeltaSource::ExactKnown};
        if (norm.dim == 3) return {M_PI / std::sqrt(18.0), DeltaSource::ExactKnown};
    }
    throw std::invalid_argument("packing density unavailable for p=" + std::to_string(norm.p) +
                                ", d=" + std::to_string(norm.dim) +
                                "; supply a value explicitly");
}

namespace {

long long saturating_ipow(long long base, int exp) {
    long long r = 1;
    const long long cap = std::numeric_limits<long long>::max();
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap;
        r *= base;
    }
    return r;
}

} // namespace

long long separated_count_upper(const NormSpec& norm, double K) {
    check_norm(norm);
    if (!(K > 0.0))
        throw std::invalid_argument("cube side K must be positive");
    const int d = norm.dim;

    // Covering bound: cells of side just under 1/rho have diameter < 1, so
    // each holds at most one point of a 1-separated set.
    const double rho = unit_cube_diameter(norm);
    const long long per_axis = static_cast<long long>(std::floor(K * rho)) + 1;
    const long long covering = saturating_ipow(per_axis, d);

    // Volume bound: balls of radius 1/2 about the points are disjoint and
    // contained in a cube of side K+1.
    const double volume_ratio = std::pow(K + 1.0, d) * std::pow(2.0, d) / unit_ball_volume(norm);
    long long volume =
        volume_ratio >= 9e18 ? std::numeric_limits<long long>::max()
                             : static_cast<long long>(std::floor(volume_ratio));

    long long best = std::min(covering, volume);
    return std::max(best, 1LL);
}

long long covering_count(const NormSpec& norm) {
    check_norm(norm);
    const double rho = unit_cube_diameter(norm);
    const long long per_axis = static_cast<long long>(std::ceil(2.0 * rho));
    return saturating_ipow(per_axis, norm.dim);
}

} // namespace rgglab::geometry
