#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rgglab/geometry.hpp"
#include "rgglab/rng.hpp"

using namespace rgglab;
using geometry::NormSpec;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("norm_eval on the 3-4 vector") {
    const std::vector<double> v{3.0, 4.0};
    CHECK(geometry::norm_eval({2.0, 2}, v) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(geometry::norm_eval({kInf, 2}, v) == 4.0);
    CHECK(geometry::norm_eval({1.0, 2}, v) == 7.0);
}

TEST_CASE("norm_eval rejects bad input") {
    const std::vector<double> v{1.0, 2.0, 3.0};
    CHECK_THROWS_AS(geometry::norm_eval({2.0, 2}, v), std::invalid_argument);
    CHECK_THROWS_AS(geometry::norm_eval({0.5, 3}, v), std::invalid_argument);
    CHECK(geometry::norm_eval({2.0, 3}, std::vector<double>{0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("triangle inequality and homogeneity on random triples") {
    CounterRng rng{2024};
    std::uint64_t c = 0;
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
        for (int d : {1, 2, 3}) {
            const NormSpec norm{p, d};
            for (int rep = 0; rep < 50; ++rep) {
                std::vector<double> v(d), w(d), sum(d), scaled(d);
                for (int j = 0; j < d; ++j) {
                    v[j] = 2.0 * rng.unit(c++) - 1.0;
                    w[j] = 2.0 * rng.unit(c++) - 1.0;
                    sum[j] = v[j] + w[j];
                }
                const double lambda = 4.0 * rng.unit(c++) - 2.0;
                for (int j = 0; j < d; ++j) scaled[j] = lambda * v[j];
                const double nv = geometry::norm_eval(norm, v);
                const double nw = geometry::norm_eval(norm, w);
                CHECK(geometry::norm_eval(norm, sum) <= nv + nw + 1e-12);
                CHECK(geometry::norm_eval(norm, scaled) ==
                      doctest::Approx(std::fabs(lambda) * nv).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("unit ball volumes in the plane") {
    CHECK(geometry::unit_ball_volume({2.0, 2}) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(geometry::unit_ball_volume({kInf, 2}) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(geometry::unit_ball_volume({1.0, 2}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(geometry::unit_ball_volume({2.0, 3}) ==
          doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
}

TEST_CASE("packing density registry") {
    const auto plane = geometry::packing_density({2.0, 2});
    CHECK(plane.delta == doctest::Approx(M_PI / (2.0 * std::sqrt(3.0))).epsilon(1e-15));
    CHECK(plane.delta == doctest::Approx(0.9069).epsilon(1e-4));
    CHECK(plane.source == geometry::DeltaSource::ExactKnown);
    CHECK(geometry::packing_density({kInf, 3}).delta == 1.0);
    CHECK(geometry::packing_density({2.0, 1}).delta == 1.0);
    CHECK(geometry::packing_density({2.0, 3}).delta ==
          doctest::Approx(M_PI / std::sqrt(18.0)).epsilon(1e-15));
    CHECK_THROWS_AS(geometry::packing_density({3.0, 2}), std::invalid_argument);
    const auto user = geometry::packing_density({3.0, 2}, 0.9);
    CHECK(user.delta == 0.9);
    CHECK(user.source == geometry::DeltaSource::UserSupplied);
    CHECK_THROWS_AS(geometry::packing_density({3.0, 2}, 1.5), std::invalid_argument);
}

TEST_CASE("separated_count_upper pinned values") {
    // Euclidean d=2, K=2: volume bound floor(36/pi)=11, covering bound 3^2=9.
    CHECK(geometry::separated_count_upper({2.0, 2}, 2.0) == 9);
    // shrinking cube: one point always fits
    CHECK(geometry::separated_count_upper({2.0, 2}, 1e-9) == 1);
    CHECK(geometry::separated_count_upper({kInf, 3}, 1e-9) == 1);
    // max norm on the line, K=3: both bounds give 4
    CHECK(geometry::separated_count_upper({kInf, 1}, 3.0) == 4);
    CHECK_THROWS_AS(geometry::separated_count_upper({2.0, 2}, 0.0), std::invalid_argument);
}

TEST_CASE("separated_count_upper is monotone in K and sound") {
    for (double p : {1.0, 2.0, kInf}) {
        for (int d : {1, 2}) {
            const NormSpec norm{p, d};
            long long prev = 0;
            for (double K = 0.25; K <= 16.0; K *= 2.0) {
                const long long cur = geometry::separated_count_upper(norm, K);
                CHECK(cur >= prev);
                prev = cur;
                // soundness: an axis grid spaced just over 1 apart is
                // 1-separated in every p-norm
                const long long per_axis = static_cast<long long>(std::floor(K / 1.0001)) + 1;
                long long lattice = 1;
                for (int j = 0; j < d; ++j) lattice *= per_axis;
                CHECK(cur >= lattice);
            }
        }
    }
}

TEST_CASE("covering_count gives the chi <= k omega constant") {
    // Euclidean plane: a 3x3 grid of diameter-1 cells covers the unit ball.
    CHECK(geometry::covering_count({2.0, 2}) == 9);
    CHECK(geometry::covering_count({kInf, 2}) == 4);
}
