// Benchmark comparing the OpenMP kernels against their serial references:
// grid-bucketed neighbour search vs the all-pairs reference, and the parallel
// scan candidate evaluation vs a single thread.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rgglab/graph.hpp"
#include "rgglab/scan.hpp"

using namespace rgglab;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(F&& f) {
    const auto a = std::chrono::steady_clock::now();
    f();
    const auto b = std::chrono::steady_clock::now();
    return seconds(a, b);
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

int main() {
    const geometry::NormSpec norm{2.0, 2};
    const int threads = max_threads();
    std::printf("threads available: %d\n\n", threads);

    {
        const std::size_t n = 5000;
        const double r = rgg::radius_for_t(static_cast<double>(n), 4.0, 1.0, 2);
        const auto cloud = rgg::sample_points(rgg::DensityModel::uniform_cube(2), n, 42);

        rgg::GeometricGraph ga, gb;
        const double t_ref = timed([&] { ga = rgg::build_graph_reference(cloud, r, norm); });
        set_threads(threads);
        const double t_par = timed([&] { gb = rgg::build_graph(cloud, r, norm); });
        const bool same = ga.neighbors == gb.neighbors && ga.offsets == gb.offsets;
        std::printf("build_graph       n=%zu  all-pairs %.3fs | grid(omp) %.3fs  "
                    "speedup %.1fx  identical=%s\n",
                    n, t_ref, t_par, t_ref / t_par, same ? "yes" : "NO");
    }

    {
        const std::size_t n = 100000;
        const double r = rgg::radius_for_t(static_cast<double>(n), 4.0, 1.0, 2);
        const auto cloud = rgg::sample_points(rgg::DensityModel::uniform_cube(2), n, 7);

        rgg::GeometricGraph g1, gk;
        set_threads(1);
        const double t1 = timed([&] { g1 = rgg::build_graph(cloud, r, norm); });
        set_threads(threads);
        const double tk = timed([&] { gk = rgg::build_graph(cloud, r, norm); });
        const bool same = g1.neighbors == gk.neighbors;
        std::printf("build_graph(grid) n=%zu  1 thread %.3fs | %d threads %.3fs  "
                    "speedup %.1fx  identical=%s\n",
                    n, t1, threads, tk, t1 / tk, same ? "yes" : "NO");
    }

    {
        const std::size_t n = 30000;
        const double r = rgg::radius_for_t(static_cast<double>(n), 4.0, 1.0, 2);
        const auto cloud = rgg::sample_points(rgg::DensityModel::uniform_cube(2), n, 11);

        scan::ScanResult s1, sk;
        set_threads(1);
        const double t1 = timed([&] { s1 = scan::scan_ball(cloud, r / 2.0, norm); });
        set_threads(threads);
        const double tk = timed([&] { sk = scan::scan_ball(cloud, r / 2.0, norm); });
        const bool same = s1.value == sk.value && s1.witness == sk.witness;
        std::printf("scan_ball         n=%zu  1 thread %.3fs | %d threads %.3fs  "
                    "speedup %.1fx  identical=%s\n",
                    n, t1, threads, tk, t1 / tk, same ? "yes" : "NO");
    }

    return 0;
}
