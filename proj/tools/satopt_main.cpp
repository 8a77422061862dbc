#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satopt/analysis.hpp"
#include "satopt/config.hpp"
#include "satopt/csv.hpp"
#include "satopt/montecarlo.hpp"
#include "satopt/quadrature.hpp"
#include "satopt/scenario.hpp"

namespace {

using namespace satopt;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<unsigned> workers;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config", args.config_path, "scenario config file")
        ->required();
    cmd->add_option("--out", args.out_path, "output CSV path")->required();
    cmd->add_option("--seed", args.seed, "override the RNG seed");
    cmd->add_option("--trials", args.trials, "override the MC trial count");
    cmd->add_option("--workers", args.workers, "override the MC worker count");
}

config::RunConfig load(const CommonArgs& args) {
    auto cfg = config::parse_config_file(args.config_path);
    if (args.seed) cfg.seed = *args.seed;
    if (args.trials) cfg.trials = *args.trials;
    if (args.workers) cfg.workers = *args.workers;
    return cfg;
}

std::vector<scenario::SitePhysics> derive_sites(const config::RunConfig& cfg) {
    std::vector<scenario::SitePhysics> out;
    out.reserve(cfg.sites.size());
    for (const auto& site : cfg.sites) {
        out.push_back(scenario::derive_site(site, cfg.scen.satellite_altitude_m,
                                            cfg.scen.cn2_ground));
    }
    return out;
}

std::vector<double> sweep_points(const config::RunConfig& cfg) {
    if (!(cfg.sweep_step_db > 0.0) || cfg.sweep_stop_db < cfg.sweep_start_db) {
        throw std::domain_error("sweep range requires stop >= start and step > 0");
    }
    std::vector<double> points;
    for (int i = 0;; ++i) {
        const double x = cfg.sweep_start_db + i * cfg.sweep_step_db;
        if (x > cfg.sweep_stop_db + 1e-9) break;
        points.push_back(x);
    }
    return points;
}

void emit(const CommonArgs& args, const config::RunConfig& cfg,
          csv::SweepResult result) {
    result.metadata = config::resolved_string(cfg);
    csv::write_csv_file(args.out_path, result);
    std::ofstream echo(args.out_path + ".resolved.cfg", std::ios::binary);
    if (!echo) {
        throw std::runtime_error("cannot write resolved-config echo next to '" +
                                 args.out_path + "'");
    }
    echo << result.metadata;
    std::cout << "wrote " << args.out_path << " (" << result.rows.size()
              << " rows)\n";
}

int cmd_outage_sweep(const CommonArgs& args) {
    const auto cfg = load(args);
    const auto physics = derive_sites(cfg);
    auto net = scenario::make_network(physics, cfg.constellation_size,
                                      scenario::db_to_linear(cfg.gamma_th_db),
                                      1.0);
    csv::SweepResult result;
    result.abscissa_name = "gamma_bar_db";
    result.ordinate_name = "outage_probability";
    const bool with_series = cfg.constellation_size == 1;
    result.columns = {"gamma_bar_db", "op_exact", "op_exact_log10"};
    if (with_series) result.columns.push_back("op_series");
    result.columns.push_back("op_asymptotic_log10");
    for (double db : sweep_points(cfg)) {
        const auto at = analysis::with_gamma_bar(net, scenario::db_to_linear(db));
        std::vector<double> row = {db, analysis::outage_probability_exact(at),
                                   analysis::outage_probability_exact_log10(at)};
        if (with_series) {
            row.push_back(analysis::outage_probability_series(at, 1e-12));
        }
        row.push_back(analysis::outage_asymptotic_log10(at));
        result.rows.push_back(std::move(row));
    }
    emit(args, cfg, std::move(result));
    return 0;
}

int cmd_capacity_sweep(const CommonArgs& args) {
    const auto cfg = load(args);
    const auto physics = derive_sites(cfg);
    auto net = scenario::make_network(physics, cfg.constellation_size,
                                      scenario::db_to_linear(cfg.gamma_th_db),
                                      1.0);
    const bool homog = analysis::homogeneous(net);
    csv::SweepResult result;
    result.abscissa_name = "gamma_bar_db";
    result.ordinate_name = "ergodic_capacity_bits";
    result.columns = {"gamma_bar_db", "capacity_b1"};
    if (homog) result.columns.push_back("capacity_b2");
    for (double db : sweep_points(cfg)) {
        const auto at = analysis::with_gamma_bar(net, scenario::db_to_linear(db));
        std::vector<double> row = {db, analysis::capacity_bound_b1(at)};
        if (homog) row.push_back(analysis::capacity_bound_b2(at));
        result.rows.push_back(std::move(row));
    }
    emit(args, cfg, std::move(result));
    return 0;
}

int cmd_diversity(const CommonArgs& args) {
    const auto cfg = load(args);
    const auto physics = derive_sites(cfg);
    const double per_site =
        physics.front().ew.alpha * physics.front().ew.beta / 2.0;
    csv::SweepResult result;
    result.abscissa_name = "row";
    result.ordinate_name = "diversity_order";
    result.columns = {"row", "ground_stations", "satellites", "diversity_order"};
    double row_idx = 0.0;
    for (int z : cfg.z_values) {
        if (z < 1) throw std::domain_error("z_values entries must be >= 1");
        for (int k = 1; k <= cfg.k_max; ++k) {
            std::vector<scenario::SitePhysics> replicated(
                static_cast<std::size_t>(k), physics.front());
            const auto net = scenario::make_network(
                replicated, z, scenario::db_to_linear(cfg.gamma_th_db),
                scenario::db_to_linear(cfg.gamma_bar_db));
            result.rows.push_back({++row_idx, static_cast<double>(k),
                                   static_cast<double>(z),
                                   analysis::diversity_order_constellation(net)});
        }
    }
    (void)per_site;
    emit(args, cfg, std::move(result));
    return 0;
}

int cmd_aperture(const CommonArgs& args) {
    const auto cfg = load(args);
    if (cfg.aperture_points < 2 || !(cfg.aperture_max_m > cfg.aperture_min_m) ||
        !(cfg.aperture_min_m >= 0.0)) {
        throw std::domain_error("aperture sweep needs 0 <= min < max and >= 2 points");
    }
    csv::SweepResult result;
    result.abscissa_name = "aperture_m";
    result.ordinate_name = "outage_probability";
    result.columns = {"aperture_m", "scintillation_index", "op_exact",
                      "op_exact_log10"};
    const double gamma_bar = scenario::db_to_linear(cfg.gamma_bar_db);
    const double gamma_th = scenario::db_to_linear(cfg.gamma_th_db);
    for (int i = 0; i < cfg.aperture_points; ++i) {
        const double d = cfg.aperture_min_m +
                         (cfg.aperture_max_m - cfg.aperture_min_m) * i /
                             (cfg.aperture_points - 1);
        std::vector<scenario::SitePhysics> physics;
        physics.reserve(cfg.sites.size());
        for (auto site : cfg.sites) {
            site.aperture_diameter_m = d;
            physics.push_back(scenario::derive_site(
                site, cfg.scen.satellite_altitude_m, cfg.scen.cn2_ground));
        }
        const auto net = scenario::make_network(physics, cfg.constellation_size,
                                                gamma_th, gamma_bar);
        result.rows.push_back({d, physics.front().scint.scintillation_index,
                               analysis::outage_probability_exact(net),
                               analysis::outage_probability_exact_log10(net)});
    }
    emit(args, cfg, std::move(result));
    return 0;
}

int cmd_mc_verify(const CommonArgs& args) {
    const auto cfg = load(args);
    const auto physics = derive_sites(cfg);
    auto net = scenario::make_network(physics, cfg.constellation_size,
                                      scenario::db_to_linear(cfg.gamma_th_db),
                                      1.0);
    const bool capacity = cfg.mc_metric == "capacity";
    const bool homog = analysis::homogeneous(net);
    csv::SweepResult result;
    result.abscissa_name = "gamma_bar_db";
    result.ordinate_name = capacity ? "ergodic_capacity_bits" : "outage_probability";
    if (capacity) {
        result.columns = {"gamma_bar_db", "capacity_b1"};
        if (homog) result.columns.push_back("capacity_b2");
        result.columns.insert(result.columns.end(), {"mc_estimate", "mc_standard_error"});
    } else {
        result.columns = {"gamma_bar_db", "op_exact", "mc_estimate",
                          "mc_standard_error", "mc_resolved"};
    }
    for (double db : sweep_points(cfg)) {
        const auto at = analysis::with_gamma_bar(net, scenario::db_to_linear(db));
        montecarlo::McConfig mc{cfg.trials, cfg.seed, cfg.workers, at};
        if (capacity) {
            const auto est = montecarlo::simulate_capacity(mc);
            std::vector<double> row = {db, analysis::capacity_bound_b1(at)};
            if (homog) row.push_back(analysis::capacity_bound_b2(at));
            row.push_back(est.point_estimate);
            row.push_back(est.standard_error);
            result.rows.push_back(std::move(row));
        } else {
            const auto est = montecarlo::simulate_outage(mc);
            const bool ok = !est.below_resolution;
            result.rows.push_back({db, analysis::outage_probability_exact(at),
                                   ok ? est.point_estimate : 0.0,
                                   ok ? est.standard_error : 0.0,
                                   ok ? 1.0 : 0.0});
        }
    }
    emit(args, cfg, std::move(result));
    return 0;
}

int cmd_table3(const CommonArgs& args) {
    const auto cfg = load(args);
    const double gamma_bar = scenario::db_to_linear(cfg.gamma_bar_db);
    const double gamma_th = scenario::db_to_linear(cfg.gamma_th_db);
    const int k = static_cast<int>(cfg.sites.size());
    csv::SweepResult result;
    result.abscissa_name = "row";
    result.ordinate_name = "outage_probability";
    result.columns = {"row",  "scenario_case",       "zenith_deg",
                      "sites", "attenuation",        "scintillation_index",
                      "op_exact", "op_exact_log10"};
    double row_idx = 0.0;
    for (int case_id : {1, 2}) {
        const auto preset = case_id == 1 ? scenario::ground_level()
                                         : scenario::high_ground_windy();
        for (double zenith : {0.0, 15.0, 30.0, 40.0}) {
            SiteConfig site;
            site.zenith_angle_deg = zenith;
            site.cloud = atmosphere::cloud_preset(atmosphere::CloudClass::ThinCirrus);
            site.wavelength_nm = cfg.scen.wavelength_nm;
            site = scenario::apply_preset(preset, site);
            const auto sp = scenario::derive_site(
                site, cfg.scen.satellite_altitude_m, cfg.scen.cn2_ground);
            std::vector<scenario::SitePhysics> replicated(
                static_cast<std::size_t>(k), sp);
            const auto net =
                scenario::make_network(replicated, 1, gamma_th, gamma_bar);
            result.rows.push_back({++row_idx, static_cast<double>(case_id),
                                   zenith, static_cast<double>(k),
                                   sp.attenuation.total,
                                   sp.scint.scintillation_index,
                                   analysis::outage_probability_exact(net),
                                   analysis::outage_probability_exact_log10(net)});
        }
    }
    emit(args, cfg, std::move(result));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Downlink optical satellite site-diversity toolkit"};
    app.require_subcommand(1);

    CommonArgs outage_args, capacity_args, diversity_args, aperture_args,
        mc_args, table3_args;
    add_common(app.add_subcommand("outage-sweep",
                                  "exact/series/asymptotic outage vs average SNR"),
               outage_args);
    add_common(app.add_subcommand("capacity-sweep",
                                  "ergodic-capacity bounds vs average SNR"),
               capacity_args);
    add_common(app.add_subcommand("diversity",
                                  "diversity order vs station and satellite count"),
               diversity_args);
    add_common(app.add_subcommand("aperture",
                                  "scintillation and outage vs aperture diameter"),
               aperture_args);
    add_common(app.add_subcommand("mc-verify",
                                  "closed forms vs Monte Carlo with standard errors"),
               mc_args);
    add_common(app.add_subcommand("table3",
                                  "deployment-scenario outage table"),
               table3_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("outage-sweep")) return cmd_outage_sweep(outage_args);
        if (app.got_subcommand("capacity-sweep")) return cmd_capacity_sweep(capacity_args);
        if (app.got_subcommand("diversity")) return cmd_diversity(diversity_args);
        if (app.got_subcommand("aperture")) return cmd_aperture(aperture_args);
        if (app.got_subcommand("mc-verify")) return cmd_mc_verify(mc_args);
        if (app.got_subcommand("table3")) return cmd_table3(table3_args);
    } catch (const config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const quadrature::QuadratureError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
