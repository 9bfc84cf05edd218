#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rgglab/graphkit.hpp"
#include "support/oracles.hpp"
#include "support/rational_lp.hpp"

using namespace rgglab;

namespace {

const geometry::NormSpec kPlane{2.0, 2};

rgg::GeometricGraph cloud_graph(std::initializer_list<double> coords, double r) {
    rgg::PointCloud cloud;
    cloud.dim = 2;
    cloud.coords = coords;
    cloud.n = cloud.coords.size() / 2;
    return rgg::build_graph(std::move(cloud), r, kPlane);
}

rgg::GeometricGraph random_graph(std::size_t n, double t, std::uint64_t seed) {
    auto cloud = rgg::sample_points(rgg::DensityModel::uniform_cube(2), n, seed);
    const double r = rgg::radius_for_t(static_cast<double>(n), t, 1.0, 2);
    return rgg::build_graph(std::move(cloud), r, kPlane);
}

bool clique_is_valid(const rgg::GeometricGraph& g, const graphkit::CliqueResult& c) {
    if (static_cast<int>(c.witness.size()) != c.size) return false;
    for (std::size_t a = 0; a < c.witness.size(); ++a)
        for (std::size_t b = a + 1; b < c.witness.size(); ++b)
            if (!g.adjacent(c.witness[a], c.witness[b])) return false;
    return true;
}

} // namespace

TEST_CASE("clique pinned cases") {
    const auto tri = cloud_graph({0.1, 0.1, 0.15, 0.1, 0.125, 0.14}, 0.1);
    const auto c = graphkit::clique_number(tri);
    CHECK(c.size == 3);
    CHECK(clique_is_valid(tri, c));

    const auto lone = cloud_graph({0.1, 0.1, 0.3, 0.3, 0.5, 0.5, 0.7, 0.7, 0.9, 0.9}, 0.05);
    CHECK(graphkit::clique_number(lone).size == 1);

    const auto full = cloud_graph({0.1, 0.1, 0.15, 0.1, 0.125, 0.14, 0.12, 0.11}, 1.0);
    CHECK(graphkit::clique_number(full).size == 4);
}

TEST_CASE("clique matches exhaustive enumeration") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto g = random_graph(12, 1.0 + (seed % 5), seed);
        const auto got = graphkit::clique_number(g);
        CHECK(got.size == oracle::brute_clique(oracle::small_graph(g)));
        CHECK(clique_is_valid(g, got));
    }
}

TEST_CASE("clique witness is deterministic") {
    const auto g = random_graph(300, 4.0, 77);
    const auto a = graphkit::clique_number(g);
    const auto b = graphkit::clique_number(g);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
    CHECK(clique_is_valid(g, a));
}

TEST_CASE("chromatic pinned cases") {
    const auto pent = rgg::build_graph(oracle::pentagon_cloud(), oracle::pentagon_r, kPlane);
    REQUIRE(pent.num_edges() == 5);
    const auto chi5 = graphkit::chromatic_number_exact(pent);
    REQUIRE(chi5.has_value());
    CHECK(chi5->chi == 3);
    CHECK(graphkit::is_proper_colouring(pent, chi5->colouring));

    const auto full = cloud_graph({0.1, 0.1, 0.15, 0.1, 0.125, 0.14, 0.12, 0.11}, 1.0);
    const auto chi4 = graphkit::chromatic_number_exact(full);
    REQUIRE(chi4.has_value());
    CHECK(chi4->chi == 4);
    CHECK(graphkit::is_proper_colouring(full, chi4->colouring));
}

TEST_CASE("chromatic matches exhaustive search") {
    for (std::uint64_t seed = 31; seed <= 60; ++seed) {
        const auto g = random_graph(12, 1.0 + (seed % 5), seed);
        const auto got = graphkit::chromatic_number_exact(g);
        REQUIRE(got.has_value());
        CHECK(got->chi == oracle::brute_chromatic(oracle::small_graph(g)));
        CHECK(graphkit::is_proper_colouring(g, got->colouring));
        CHECK(got->colouring.palette == got->chi);
    }
}

TEST_CASE("chromatic budget exhaustion is reported") {
    const auto g = random_graph(60, 8.0, 5);
    CHECK_FALSE(graphkit::chromatic_number_exact(g, 3).has_value());
}

TEST_CASE("chromatic bounds pinned cases") {
    const auto full = cloud_graph({0.1, 0.1, 0.15, 0.1, 0.125, 0.14, 0.12, 0.11}, 1.0);
    const auto fb = graphkit::chromatic_bounds(full);
    CHECK(fb.lower == 4);
    CHECK(fb.upper == 4);

    // C5: chi_f = 5/2, and the two-level dual scan certifies ceil(5/2) = 3
    const auto pent = rgg::build_graph(oracle::pentagon_cloud(), oracle::pentagon_r, kPlane);
    const auto pb = graphkit::chromatic_bounds(pent);
    CHECK(pb.lower >= 3);
    CHECK(pb.upper == 3);
    CHECK(graphkit::is_proper_colouring(pent, pb.greedy));
}

TEST_CASE("chromatic bounds sandwich on random graphs") {
    int solved = 0;
    for (std::uint64_t seed = 61; seed <= 72; ++seed) {
        const auto g = random_graph(60, 1.0 + (seed % 3), seed);
        const auto b = graphkit::chromatic_bounds(g);
        CHECK(b.lower <= b.upper);
        CHECK(b.upper <= static_cast<int>(g.max_degree()) + 1);
        CHECK(graphkit::is_proper_colouring(g, b.greedy));

        const auto omega = graphkit::clique_number(g);
        const auto exact = graphkit::chromatic_number_exact(g, 2'000'000);
        if (!exact) continue; // node budget; bounds were still checked
        ++solved;
        CHECK(b.lower <= exact->chi);
        CHECK(exact->chi <= b.upper);
        CHECK(omega.size <= exact->chi);
        CHECK(exact->chi <= geometry::covering_count(kPlane) * omega.size);
    }
    CHECK(solved >= 8); // most of these instances close exactly
}

TEST_CASE("fractional chromatic pinned cases") {
    const auto pent = rgg::build_graph(oracle::pentagon_cloud(), oracle::pentagon_r, kPlane);
    const auto f5 = graphkit::fractional_chromatic(pent, 1e-6);
    CHECK(f5.objective == doctest::Approx(2.5).epsilon(1e-6));
    CHECK(f5.gap <= 1e-6);

    const auto full = cloud_graph({0.1, 0.1, 0.15, 0.1, 0.125, 0.14, 0.12, 0.11}, 1.0);
    CHECK(graphkit::fractional_chromatic(full, 1e-6).objective ==
          doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("fractional chromatic certificates are consistent") {
    for (std::uint64_t seed = 80; seed <= 92; ++seed) {
        const auto g = random_graph(40, 3.0, seed);
        const double tol = 1e-6;
        const auto sol = graphkit::fractional_chromatic(g, tol);
        std::vector<double> covered(g.num_vertices(), 0.0);
        for (const auto& [set, weight] : sol.cover) {
            CHECK(weight > 0.0);
            for (std::size_t a = 0; a < set.size(); ++a) {
                covered[set[a]] += weight;
                for (std::size_t b = a + 1; b < set.size(); ++b)
                    CHECK_FALSE(g.adjacent(set[a], set[b]));
            }
        }
        for (double c : covered) CHECK(c >= 1.0 - 1e-9);
        CHECK(sol.gap <= tol);
        CHECK(sol.objective >= sol.dual_objective - 1e-12);

        const auto omega = graphkit::clique_number(g);
        const auto chi = graphkit::chromatic_number_exact(g);
        REQUIRE(chi.has_value());
        CHECK(sol.objective >= omega.size - 1e-6);
        CHECK(sol.objective <= chi->chi + 1e-6);
    }
}

TEST_CASE("fractional chromatic equals the exact rational LP") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        const auto g = random_graph(8, 1.5 + (seed % 4), seed);
        const auto sol = graphkit::fractional_chromatic(g, 1e-6);
        const double want =
            static_cast<double>(oracle::exact_fractional_chromatic(oracle::small_graph(g)));
        CHECK(sol.objective == doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("dual_bound pinned cases") {
    const auto phi0 = limits::phi_zero(kPlane);
    // a tight cluster with pairwise distances < r/2 fits one half-ball
    rgg::PointCloud cluster;
    cluster.dim = 2;
    cluster.n = 6;
    cluster.coords = {0.50, 0.50, 0.51, 0.50, 0.50, 0.51,
                      0.51, 0.51, 0.505, 0.505, 0.512, 0.508};
    CHECK(graphkit::dual_bound(cluster, 0.2, kPlane, phi0) == doctest::Approx(6.0));

    rgg::PointCloud empty;
    empty.dim = 2;
    empty.n = 0;
    CHECK(graphkit::dual_bound(empty, 0.2, kPlane, phi0) == 0.0);
}

TEST_CASE("dual_bound never exceeds chi_f") {
    const auto catalog = limits::standard_catalog(kPlane);
    for (std::uint64_t seed = 140; seed <= 146; ++seed) {
        const auto g = random_graph(40, 3.0, seed);
        const double chif = graphkit::fractional_chromatic(g, 1e-8).objective;
        for (const auto& entry : catalog.entries) {
            if (!entry.radial) continue;
            const double bound = graphkit::dual_bound(g.cloud, g.r, kPlane, *entry.radial);
            CHECK(bound <= chif + 1e-6);
        }
    }
}

TEST_CASE("grid LP colouring pinned cases") {
    rgg::PointCloud empty;
    empty.dim = 2;
    empty.n = 0;
    const auto ge = graphkit::grid_lp_colouring(empty, 0.1, kPlane, 0.5, 2);
    CHECK(ge.colouring.palette == 0);

    // a single cluster inside one cell is a clique: palette = cluster size
    rgg::PointCloud cluster;
    cluster.dim = 2;
    cluster.n = 5;
    cluster.coords = {0.501, 0.501, 0.502, 0.501, 0.501, 0.502, 0.5025, 0.5025, 0.5015, 0.5005};
    const auto gc = graphkit::grid_lp_colouring(cluster, 0.1, kPlane, 0.5, 2);
    CHECK(gc.colouring.palette == 5);
    const auto g = rgg::build_graph(cluster, 0.1, kPlane);
    CHECK(graphkit::is_proper_colouring(g, gc.colouring));
}

TEST_CASE("grid LP colouring is proper and within its guarantee") {
    for (std::uint64_t seed : {7ULL, 8ULL}) {
        auto cloud = rgg::sample_points(rgg::DensityModel::uniform_cube(2), 220, seed);
        const double r = rgg::radius_for_t(220.0, 6.0, 1.0, 2);
        const auto res = graphkit::grid_lp_colouring(cloud, r, kPlane, 0.5, 2);
        const auto g = rgg::build_graph(cloud, r, kPlane);
        CHECK(graphkit::is_proper_colouring(g, res.colouring));
        CHECK(res.colouring.palette <= res.guarantee_value);
        for (std::size_t i = 0; i < g.num_vertices(); ++i)
            CHECK(res.colouring.colour[i] >= 0);
    }
}

TEST_CASE("grid LP budget error") {
    rgg::PointCloud cloud;
    cloud.dim = 2;
    cloud.n = 1;
    cloud.coords = {0.5, 0.5};
    CHECK_THROWS_AS(graphkit::grid_lp_colouring(cloud, 0.1, kPlane, 0.5, 2, 3),
                    std::invalid_argument);
}
