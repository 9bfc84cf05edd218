#include "rgglab/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rgglab/graph.hpp"
#include "rgglab/graphkit.hpp"
#include "rgglab/rng.hpp"
#include "rgglab/scan.hpp"

namespace rgglab::labcli {

void SweepConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("sweep needs trials >= 1");
    if (n_values.empty()) throw std::invalid_argument("sweep needs at least one n");
    if (t_values.empty() && r_values.empty())
        throw std::invalid_argument("sweep needs a t list or an r list");
    if (!t_values.empty() && !r_values.empty())
        throw std::invalid_argument("give either t values or r values, not both");
    if (model.dim != dim) throw std::invalid_argument("density model dimension mismatch");
    model.validate();
}

namespace {

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

void append_double(std::string& s, double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    s.append(buf, res.ptr);
}

} // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    bool saw_density = false;
    std::string density_spec;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not \"key = value\": " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "dim") {
            cfg.dim = std::stoi(value);
        } else if (key == "norm") {
            cfg.norm_p = (value == "inf") ? std::numeric_limits<double>::infinity()
                                          : std::stod(value);
        } else if (key == "density") {
            saw_density = true;
            density_spec = value;
        } else if (key == "n") {
            for (double v : parse_double_list(value))
                cfg.n_values.push_back(static_cast<std::size_t>(v));
        } else if (key == "t") {
            cfg.t_values = parse_double_list(value);
        } else if (key == "r") {
            cfg.r_values = parse_double_list(value);
        } else if (key == "trials") {
            cfg.trials = std::stoi(value);
        } else if (key == "seed") {
            cfg.master_seed = std::stoull(value);
        } else if (key == "chi_exact_cap") {
            cfg.chi_exact_cap = std::stoull(value);
        } else if (key == "chi_f_cap") {
            cfg.chi_f_cap = std::stoull(value);
        } else if (key == "delta") {
            cfg.user_delta = std::stod(value);
        } else if (key == "output") {
            cfg.output_path = value;
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    if (!saw_density || density_spec == "uniform") {
        cfg.model = rgg::DensityModel::uniform_cube(cfg.dim);
    } else {
        std::stringstream ss(density_spec);
        std::string kind;
        ss >> kind;
        if (kind != "block")
            throw std::invalid_argument("density must be \"uniform\" or \"block <grid> <v,..>\"");
        int grid = 0;
        std::string values;
        ss >> grid >> values;
        cfg.model = rgg::DensityModel::block(cfg.dim, grid, parse_double_list(values));
    }
    cfg.validate();
    return cfg;
}

namespace {

SweepRecord run_trial(const SweepConfig& cfg, const geometry::NormSpec& norm,
                      const limits::FeasibleCatalog& catalog, std::size_t n, double r,
                      std::uint64_t seed) {
    SweepRecord rec;
    rec.n = n;
    rec.r = r;
    rec.seed = seed;
    const double sigma = cfg.model.sigma();
    rec.regime = limits::classify_regime(static_cast<double>(n), r, cfg.dim, sigma);
    rec.t = rec.regime.t;

    auto cloud = rgg::sample_points(cfg.model, n, seed);
    auto g = rgg::build_graph(std::move(cloud), r, norm);
    rec.max_degree = g.max_degree();

    rec.omega = graphkit::clique_number(g).size;
    rec.scan_phi0 = scan::scan_ball(g.cloud, r / 2.0, norm).value;

    graphkit::ChromaticBoundsOptions opt;
    opt.phi0_scan_hint = rec.scan_phi0;
    const auto bounds = graphkit::chromatic_bounds(g, opt);
    rec.chi_lb = std::max(bounds.lower, rec.omega);
    rec.chi_ub = bounds.upper;

    std::size_t max_comp = 0;
    for (const auto& comp : rgg::connected_components(g)) max_comp = std::max(max_comp, comp.size());
    if (n <= cfg.chi_exact_cap || max_comp <= cfg.chi_exact_cap) {
        if (auto exact = graphkit::chromatic_number_exact(g)) rec.chi_exact = exact->chi;
    }
    if (n <= cfg.chi_f_cap) rec.chi_f = graphkit::fractional_chromatic(g, 1e-6).objective;

    rec.pred_fcli = limits::f_clique(rec.t, norm);
    const auto fcol = limits::f_chromatic_bounds(rec.t, norm, catalog, cfg.user_delta);
    rec.pred_fcol_lo = fcol.lower;
    rec.pred_fcol_hi = fcol.upper;
    rec.ratio_chi_omega =
        rec.omega > 0 ? static_cast<double>(rec.chi_ub) / rec.omega : 0.0;

    // Sandwich invariant on everything recorded.
    const int chif_floor = rec.chi_f ? static_cast<int>(std::ceil(*rec.chi_f - 1e-6)) : rec.omega;
    const bool ok = rec.omega <= chif_floor &&
                    (!rec.chi_exact || (chif_floor <= *rec.chi_exact &&
                                        *rec.chi_exact <= rec.chi_ub)) &&
                    rec.chi_ub <= static_cast<int>(rec.max_degree) + 1;
    if (!ok) throw std::logic_error("sweep record violates the sandwich invariant");
    return rec;
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const geometry::NormSpec norm{cfg.norm_p, cfg.dim};
    const auto catalog = limits::standard_catalog(norm);
    const double sigma = cfg.model.sigma();

    const std::size_t num_t = cfg.t_values.empty() ? cfg.r_values.size() : cfg.t_values.size();
    const std::size_t total = cfg.n_values.size() * num_t * static_cast<std::size_t>(cfg.trials);
    std::vector<SweepRecord> records(total);

    // Flat (n, t, trial) order; each trial owns a derived seed.
#pragma omp parallel for schedule(dynamic, 1)
    for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
        const std::size_t trial = idx % cfg.trials;
        const std::size_t ti = (idx / cfg.trials) % num_t;
        const std::size_t ni = idx / (cfg.trials * num_t);
        const std::size_t n = cfg.n_values[ni];
        const double r = cfg.t_values.empty()
                             ? cfg.r_values[ti]
                             : rgg::radius_for_t(static_cast<double>(n), cfg.t_values[ti],
                                                 sigma, cfg.dim);
        const std::uint64_t seed =
            mix_seed(mix_seed(mix_seed(cfg.master_seed, ni), ti), trial);
        records[idx] = run_trial(cfg, norm, catalog, n, r, seed);
    }

    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + cfg.output_path);
        write_sweep_csv(out, records);
    }
    return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    std::string line = kSweepCsvHeader;
    line += '\n';
    out << line;
    for (const auto& rec : records) {
        line.clear();
        line += std::to_string(rec.n);
        line += ',';
        append_double(line, rec.r);
        line += ',';
        append_double(line, rec.t);
        line += ',';
        line += limits::regime_name(rec.regime.kind);
        line += ',';
        line += std::to_string(rec.seed);
        line += ',';
        line += std::to_string(rec.omega);
        line += ',';
        line += std::to_string(rec.chi_lb);
        line += ',';
        line += std::to_string(rec.chi_ub);
        line += ',';
        if (rec.chi_exact) line += std::to_string(*rec.chi_exact);
        line += ',';
        if (rec.chi_f) append_double(line, *rec.chi_f);
        line += ',';
        append_double(line, rec.scan_phi0);
        line += ',';
        append_double(line, rec.pred_fcli);
        line += ',';
        append_double(line, rec.pred_fcol_lo);
        line += ',';
        append_double(line, rec.pred_fcol_hi);
        line += ',';
        append_double(line, rec.ratio_chi_omega);
        line += '\n';
        out << line;
    }
}

} // namespace rgglab::labcli
