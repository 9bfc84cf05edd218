#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rgglab/cloud.hpp"
#include "rgglab/geometry.hpp"
#include "rgglab/limits.hpp"

namespace rgglab::labcli {

struct SweepConfig {
    int dim = 2;
    double norm_p = 2.0;
    rgg::DensityModel model = rgg::DensityModel::uniform_cube(2);
    std::vector<std::size_t> n_values;
    std::vector<double> t_values;  // empty when radii are given directly
    std::vector<double> r_values;  // used when t_values is empty
    int trials = 1;
    std::uint64_t master_seed = 1;
    std::size_t chi_exact_cap = 2000; // largest component attempted exactly
    std::size_t chi_f_cap = 120;      // largest n for column generation
    std::optional<double> user_delta; // packing density override
    std::string output_path;          // empty: no CSV file

    void validate() const;
};

// Line-oriented "key = value" text; '#' starts a comment.  Keys:
//   dim, norm (number or "inf"), density (uniform | block <grid> <v,..>),
//   n, t, r (comma lists), trials, seed, chi_exact_cap, chi_f_cap, delta,
//   output
SweepConfig parse_sweep_config(std::istream& in);

struct SweepRecord {
    std::size_t n = 0;
    double r = 0.0;
    double t = 0.0;
    limits::RegimeLabel regime;
    std::uint64_t seed = 0;
    int omega = 0;
    int chi_lb = 0;
    int chi_ub = 0;
    std::optional<int> chi_exact;
    std::optional<double> chi_f;
    double scan_phi0 = 0.0;
    double pred_fcli = 0.0;
    double pred_fcol_lo = 0.0;
    double pred_fcol_hi = 0.0;
    double ratio_chi_omega = 0.0;
    std::size_t max_degree = 0;
};

// One record per (n, t, trial); deterministic for a fixed config, trials may
// run concurrently.  The per-trial seed is
//   mix_seed(mix_seed(mix_seed(master, n_index), t_index), trial_index).
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "n,r,t,regime,seed,omega,chi_lb,chi_ub,chi_exact,chi_f,scan_phi0,pred_fcli,"
    "pred_fcol_lo,pred_fcol_hi,ratio_chi_omega";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

// CLI entry point (subcommands: limits, sample, scan, graph, sweep).
// Returns 0 on success, 1 on runtime error, 2 on usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rgglab::labcli
