#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "rgglab/graph.hpp"
#include "rgglab/graphkit.hpp"
#include "rgglab/scan.hpp"
#include "rgglab/sweep.hpp"

namespace rgglab::labcli {

namespace {

double parse_norm(const std::string& s) {
    if (s == "inf" || s == "max") return std::numeric_limits<double>::infinity();
    return std::stod(s);
}

std::vector<double> split_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

int cmd_limits(const std::string& norm_s, int dim, const std::string& t_list,
               const std::string& beta_list, std::optional<double> delta, std::ostream& out) {
    const geometry::NormSpec norm{parse_norm(norm_s), dim};
    const auto catalog = limits::standard_catalog(norm);
    const auto ts = split_doubles(t_list);
    const auto betas = split_doubles(beta_list);

    const auto info = geometry::packing_density(norm, delta);
    out << "# norm p=" << norm_s << " d=" << dim << "  vol(B)=" << std::setprecision(10)
        << geometry::unit_ball_volume(norm) << "  delta=" << info.delta << '\n';
    out << std::left << std::setw(12) << "t" << std::setw(14) << "H(1+t)" << std::setw(14)
        << "c(1,t)" << std::setw(14) << "f_omega" << std::setw(14) << "fcol_lo"
        << std::setw(14) << "fcol_hi" << std::setw(14) << "frat_lo" << std::setw(14)
        << "frat_hi" << '\n';
    out << std::setprecision(6);
    for (double t : ts) {
        const double fo = limits::f_clique(t, norm);
        const auto fc = limits::f_chromatic_bounds(t, norm, catalog, delta);
        const auto fr = limits::f_ratio_bounds(t, norm, catalog, delta);
        out << std::left << std::setw(12) << t << std::setw(14) << limits::H(1.0 + t)
            << std::setw(14) << limits::solve_c(1.0, t) << std::setw(14) << fo
            << std::setw(14) << fc.lower << std::setw(14) << fc.upper << std::setw(14)
            << fr.lower << std::setw(14) << fr.upper << '\n';
    }
    if (!betas.empty()) {
        out << '\n'
            << std::left << std::setw(12) << "beta"
            << "mu(beta) at t = ";
        for (double t : ts) out << t << ' ';
        out << '\n';
        for (double b : betas) {
            out << std::left << std::setw(12) << b;
            for (double t : ts) out << std::setw(14) << limits::mu_beta(b, t, norm);
            out << '\n';
        }
    }
    return 0;
}

int cmd_sample(const std::string& norm_s, int dim, std::size_t n, std::uint64_t seed,
               const std::string& density, const std::string& cloud_out, double r,
               const std::string& graph_out, std::ostream& out) {
    rgg::DensityModel model = rgg::DensityModel::uniform_cube(dim);
    if (!density.empty() && density != "uniform") {
        std::stringstream ss(density);
        std::string kind;
        int grid = 0;
        std::string values;
        ss >> kind >> grid >> values;
        if (kind != "block") throw std::runtime_error("density must be uniform or block");
        model = rgg::DensityModel::block(dim, grid, split_doubles(values));
    }
    const auto cloud = rgg::sample_points(model, n, seed);
    if (!cloud_out.empty()) {
        std::ofstream f(cloud_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + cloud_out);
        rgg::write_cloud(f, cloud);
        out << "wrote cloud: " << cloud_out << " (n=" << n << ", d=" << dim << ")\n";
    } else {
        std::ostringstream buf;
        rgg::write_cloud(buf, cloud);
        out << buf.str();
    }
    if (r > 0.0) {
        const geometry::NormSpec norm{parse_norm(norm_s), dim};
        const auto g = rgg::build_graph(cloud, r, norm);
        if (!graph_out.empty()) {
            std::ofstream f(graph_out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + graph_out);
            rgg::write_edge_list(f, g);
            out << "wrote graph: " << graph_out << " (m=" << g.num_edges() << ")\n";
        } else {
            std::ostringstream buf;
            rgg::write_edge_list(buf, g);
            out << buf.str();
        }
    }
    return 0;
}

int cmd_scan(const std::string& cloud_path, const std::string& norm_s, double rho, double r,
             const std::string& phi_s, std::ostream& out) {
    std::ifstream f(cloud_path);
    if (!f) throw std::runtime_error("cannot open " + cloud_path);
    const auto cloud = rgg::read_cloud(f);
    const geometry::NormSpec norm{parse_norm(norm_s), cloud.dim};

    scan::ScanResult res;
    std::string what;
    if (rho > 0.0) {
        res = scan::scan_ball(cloud, rho, norm);
        what = "ball scan, rho=" + std::to_string(rho);
    } else {
        if (!(r > 0.0)) throw std::runtime_error("radial scan needs --r");
        limits::RadialLevels phi;
        if (phi_s == "phi0") {
            phi = limits::phi_zero(norm);
        } else if (phi_s.rfind("beta:", 0) == 0) {
            const double beta = std::stod(phi_s.substr(5));
            auto fb = limits::phi_beta(norm, beta);
            if (!fb)
                throw std::runtime_error("phi_beta not certified feasible for this norm/beta");
            phi = *fb;
        } else {
            throw std::runtime_error("--phi must be phi0 or beta:<value>");
        }
        res = scan::scan_radial(cloud, phi, r);
        what = "radial scan (" + phi_s + "), r=" + std::to_string(r);
    }
    out << what << '\n';
    out << "value   " << std::setprecision(12) << res.value << '\n';
    out << "witness ";
    for (double c : res.witness) out << c << ' ';
    out << '\n';
    out << "exact   " << (res.exact ? "yes" : "no") << '\n';
    if (!res.exact) out << "gap     " << res.gap << '\n';
    return 0;
}

int cmd_graph(const std::string& cloud_path, const std::string& norm_s, double r,
              std::size_t chi_cap, std::size_t chif_cap, std::ostream& out) {
    std::ifstream f(cloud_path);
    if (!f) throw std::runtime_error("cannot open " + cloud_path);
    const auto cloud = rgg::read_cloud(f);
    if (!(r > 0.0)) throw std::runtime_error("graph needs --r > 0");
    const geometry::NormSpec norm{parse_norm(norm_s), cloud.dim};
    const auto g = rgg::build_graph(cloud, r, norm);

    out << "n=" << g.num_vertices() << " m=" << g.num_edges()
        << " max_degree=" << g.max_degree() << '\n';
    const auto clique = graphkit::clique_number(g);
    out << "omega " << clique.size << '\n';
    const auto bounds = graphkit::chromatic_bounds(g);
    out << "chi_bounds [" << std::max(bounds.lower, clique.size) << ", " << bounds.upper
        << "]\n";
    std::size_t max_comp = 0;
    for (const auto& comp : rgg::connected_components(g))
        max_comp = std::max(max_comp, comp.size());
    if (g.num_vertices() <= chi_cap || max_comp <= chi_cap) {
        if (auto exact = graphkit::chromatic_number_exact(g))
            out << "chi_exact " << exact->chi << '\n';
        else
            out << "chi_exact unavailable (budget), use bounds\n";
    }
    if (g.num_vertices() <= chif_cap) {
        const auto frac = graphkit::fractional_chromatic(g, 1e-6);
        out << "chi_f " << std::setprecision(10) << frac.objective << " (gap "
            << frac.gap << ")\n";
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, std::ostream& out) {
    std::ifstream f(config_path);
    if (!f) throw std::runtime_error("cannot open " + config_path);
    auto cfg = parse_sweep_config(f);
    const auto records = run_sweep(cfg);
    if (cfg.output_path.empty())
        write_sweep_csv(out, records);
    else
        out << "wrote " << records.size() << " records to " << cfg.output_path << '\n';
    return 0;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"random geometric graph laboratory"};
    app.require_subcommand(1);

    std::string norm_s = "2";
    int dim = 2;
    std::string t_list = "1";
    std::string beta_list;
    std::optional<double> delta;

    auto* limits_cmd = app.add_subcommand("limits", "tabulate the analytic limit functions");
    limits_cmd->add_option("--norm", norm_s, "p-norm parameter (number or inf)");
    limits_cmd->add_option("--dim", dim, "dimension");
    limits_cmd->add_option("--t", t_list, "comma list of t values");
    limits_cmd->add_option("--beta", beta_list, "comma list of beta values for mu(beta)");
    double delta_val = -1.0;
    limits_cmd->add_option("--delta", delta_val, "packing density override");

    std::string cloud_out, graph_out, density = "uniform";
    std::size_t n = 100;
    std::uint64_t seed = 1;
    double r = -1.0;
    auto* sample_cmd = app.add_subcommand("sample", "sample a point cloud (and graph)");
    sample_cmd->add_option("--norm", norm_s, "p-norm parameter");
    sample_cmd->add_option("--dim", dim, "dimension");
    sample_cmd->add_option("--n", n, "number of points")->required();
    sample_cmd->add_option("--seed", seed, "seed");
    sample_cmd->add_option("--density", density, "uniform | \"block <grid> <v,..>\"");
    sample_cmd->add_option("--out", cloud_out, "cloud output path (default: stdout)");
    sample_cmd->add_option("--r", r, "also build the graph at this threshold");
    sample_cmd->add_option("--graph-out", graph_out, "edge list output path");

    std::string cloud_path, phi_s = "phi0";
    double rho = -1.0;
    auto* scan_cmd = app.add_subcommand("scan", "scan statistics on a cloud file");
    scan_cmd->add_option("--cloud", cloud_path, "cloud file")->required();
    scan_cmd->add_option("--norm", norm_s, "p-norm parameter");
    scan_cmd->add_option("--rho", rho, "ball scan radius");
    scan_cmd->add_option("--r", r, "scale for radial scans");
    scan_cmd->add_option("--phi", phi_s, "phi0 | beta:<value>");

    std::size_t chi_cap = 2000, chif_cap = 120;
    auto* graph_cmd = app.add_subcommand("graph", "clique/chromatic analysis of a cloud file");
    graph_cmd->add_option("--cloud", cloud_path, "cloud file")->required();
    graph_cmd->add_option("--norm", norm_s, "p-norm parameter");
    graph_cmd->add_option("--r", r, "threshold distance")->required();
    graph_cmd->add_option("--exact-chi-cap", chi_cap, "vertex cap for exact chi");
    graph_cmd->add_option("--chif-cap", chif_cap, "vertex cap for chi_f");

    std::string config_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "run a Monte Carlo sweep from a config file");
    sweep_cmd->add_option("--config", config_path, "config file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (delta_val > 0.0) delta = delta_val;
        if (limits_cmd->parsed())
            return cmd_limits(norm_s, dim, t_list, beta_list, delta, out);
        if (sample_cmd->parsed())
            return cmd_sample(norm_s, dim, n, seed, density, cloud_out, r, graph_out, out);
        if (scan_cmd->parsed()) return cmd_scan(cloud_path, norm_s, rho, r, phi_s, out);
        if (graph_cmd->parsed())
            return cmd_graph(cloud_path, norm_s, r, chi_cap, chif_cap, out);
        if (sweep_cmd->parsed()) return cmd_sweep(config_path, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace rgglab::labcli
