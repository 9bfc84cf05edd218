#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rgglab/graph.hpp"
#include "rgglab/sweep.hpp"

using namespace rgglab;
using labcli::SweepConfig;

namespace {

SweepConfig small_config() {
    SweepConfig cfg;
    cfg.dim = 2;
    cfg.norm_p = 2.0;
    cfg.model = rgg::DensityModel::uniform_cube(2);
    cfg.n_values = {50};
    cfg.t_values = {1.0};
    cfg.trials = 2;
    cfg.master_seed = 42;
    return cfg;
}

std::string csv_of(const std::vector<labcli::SweepRecord>& records) {
    std::ostringstream out;
    labcli::write_sweep_csv(out, records);
    return out.str();
}

} // namespace

TEST_CASE("config parsing round trip") {
    std::istringstream in("# comment\n"
                          "dim = 2\n"
                          "norm = 2\n"
                          "density = block 2 2,2,0,0\n"
                          "n = 50,100\n"
                          "t = 0.5,1\n"
                          "trials = 3\n"
                          "seed = 99\n"
                          "chi_exact_cap = 500\n"
                          "chi_f_cap = 60\n"
                          "output = out.csv\n");
    const auto cfg = labcli::parse_sweep_config(in);
    CHECK(cfg.dim == 2);
    CHECK(cfg.model.kind == rgg::DensityModel::Kind::BlockDensity);
    CHECK(cfg.model.sigma() == 2.0);
    CHECK(cfg.n_values == std::vector<std::size_t>{50, 100});
    CHECK(cfg.t_values == std::vector<double>{0.5, 1.0});
    CHECK(cfg.trials == 3);
    CHECK(cfg.master_seed == 99);
    CHECK(cfg.chi_exact_cap == 500);
    CHECK(cfg.chi_f_cap == 60);
    CHECK(cfg.output_path == "out.csv");
}

TEST_CASE("config rejects bad input") {
    std::istringstream bad1("dim = 2\n");
    CHECK_THROWS_AS(labcli::parse_sweep_config(bad1), std::invalid_argument);
    std::istringstream bad2("unknown_key = 3\nn = 10\nt = 1\n");
    CHECK_THROWS_AS(labcli::parse_sweep_config(bad2), std::invalid_argument);
    std::istringstream bad3("n = 10\nt = 1\nr = 0.1\n");
    CHECK_THROWS_AS(labcli::parse_sweep_config(bad3), std::invalid_argument);
}

TEST_CASE("sweep is deterministic and canonical") {
    const auto cfg = small_config();
    const auto a = run_sweep(cfg);
    const auto b = run_sweep(cfg);
    REQUIRE(a.size() == 2);
    CHECK(csv_of(a) == csv_of(b)); // byte identical
    CHECK(a[0].seed != a[1].seed); // per-trial streams differ
}

TEST_CASE("csv header and record shape") {
    const auto records = run_sweep(small_config());
    const std::string csv = csv_of(records);
    const std::string header = csv.substr(0, csv.find('\n'));
    CHECK(header == std::string(labcli::kSweepCsvHeader));
    CHECK(header ==
          "n,r,t,regime,seed,omega,chi_lb,chi_ub,chi_exact,chi_f,scan_phi0,pred_fcli,"
          "pred_fcol_lo,pred_fcol_hi,ratio_chi_omega");
    // one line per record plus the header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(records.size()) + 1);
}

TEST_CASE("records satisfy the sandwich and match fresh predictions") {
    auto cfg = small_config();
    cfg.n_values = {40, 80};
    cfg.t_values = {0.5, 2.0};
    cfg.trials = 2;
    const auto records = run_sweep(cfg);
    const auto catalog = limits::standard_catalog({2.0, 2});
    REQUIRE(records.size() == 8);
    for (const auto& rec : records) {
        REQUIRE(rec.chi_exact.has_value());
        REQUIRE(rec.chi_f.has_value());
        const int chif_ceil = static_cast<int>(std::ceil(*rec.chi_f - 1e-6));
        CHECK(rec.omega <= chif_ceil);
        CHECK(chif_ceil <= *rec.chi_exact);
        CHECK(*rec.chi_exact <= rec.chi_ub);
        CHECK(rec.chi_ub <= static_cast<int>(rec.max_degree) + 1);
        // predicted columns recompute from (n, r, t) alone
        CHECK(rec.pred_fcli ==
              doctest::Approx(limits::f_clique(rec.t, {2.0, 2})).epsilon(1e-12));
        const auto fc = limits::f_chromatic_bounds(rec.t, {2.0, 2}, catalog);
        CHECK(rec.pred_fcol_lo == doctest::Approx(fc.lower).epsilon(1e-12));
        CHECK(rec.pred_fcol_hi == doctest::Approx(fc.upper).epsilon(1e-12));
        // regime label matches a fresh classification
        CHECK(rec.regime.kind ==
              limits::classify_regime(static_cast<double>(rec.n), rec.r, 2, 1.0).kind);
    }
}

TEST_CASE("very sparse mini sweep has chi equal to omega") {
    SweepConfig cfg;
    cfg.dim = 2;
    cfg.model = rgg::DensityModel::uniform_cube(2);
    cfg.n_values = {3000};
    // n r^2 = n^{-1/2}
    cfg.r_values = {std::pow(3000.0, -0.75)};
    cfg.trials = 5;
    cfg.master_seed = 7;
    const auto records = run_sweep(cfg);
    for (const auto& rec : records) {
        CHECK(rec.regime.kind == limits::Regime::VerySparse);
        REQUIRE(rec.chi_exact.has_value());
        CHECK(*rec.chi_exact == rec.omega);
    }
}

TEST_CASE("cli limits subcommand") {
    std::ostringstream out, err;
    const int rc = labcli::cli_dispatch(
        {"limits", "--dim", "2", "--norm", "2", "--t", "1,10,100"}, out, err);
    CHECK(rc == 0);
    const std::string text = out.str();
    // the ratio upper bound approaches 2 sqrt(3)/pi ~ 1.1027 at t = 100
    CHECK(text.find("1.1") != std::string::npos);
    CHECK(text.find("f_omega") != std::string::npos);
}

TEST_CASE("cli graph subcommand on a mutual triangle") {
    const char* cloud_path = "cli_test_cloud.txt";
    {
        rgg::PointCloud cloud;
        cloud.dim = 2;
        cloud.n = 3;
        cloud.coords = {0.50, 0.50, 0.55, 0.50, 0.52, 0.54};
        std::ofstream f(cloud_path);
        rgg::write_cloud(f, cloud);
    }
    std::ostringstream out, err;
    const int rc =
        labcli::cli_dispatch({"graph", "--cloud", cloud_path, "--r", "0.1"}, out, err);
    CHECK(rc == 0);
    const std::string text = out.str();
    CHECK(text.find("omega 3") != std::string::npos);
    CHECK(text.find("chi_exact 3") != std::string::npos);
    std::remove(cloud_path);
}

TEST_CASE("cli exit codes") {
    std::ostringstream out, err;
    CHECK(labcli::cli_dispatch({"bogus"}, out, err) == 2);
    CHECK(labcli::cli_dispatch({"graph", "--cloud", "missing_file.txt", "--r", "0.1"}, out,
                               err) == 1);
    CHECK(labcli::cli_dispatch({"--help"}, out, err) == 0);
}

TEST_CASE("cli sweep writes the csv") {
    const char* cfg_path = "cli_test_sweep.cfg";
    const char* csv_path = "cli_test_sweep.csv";
    {
        std::ofstream f(cfg_path);
        f << "dim = 2\nnorm = 2\nn = 30\nt = 1\ntrials = 1\nseed = 5\noutput = " << csv_path
          << "\n";
    }
    std::ostringstream out, err;
    const int rc = labcli::cli_dispatch({"sweep", "--config", cfg_path}, out, err);
    CHECK(rc == 0);
    std::ifstream csv(csv_path);
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == std::string(labcli::kSweepCsvHeader));
    std::remove(cfg_path);
    std::remove(csv_path);
}
