#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "satopt/scenario.hpp"

namespace satopt::config {

/// Parse failure with a file:line reference in the message.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fully resolved run description: scenario defaults applied, sites expanded.
struct RunConfig {
    std::string preset_name = "ground_level";
    scenario::ScenarioPreset scen = scenario::ground_level();
    std::vector<SiteConfig> sites;
    int constellation_size = 1;
    double gamma_th_db = 7.0;

    // sweep section
    double sweep_start_db = 0.0;
    double sweep_stop_db = 80.0;
    double sweep_step_db = 1.0;
    double gamma_bar_db = 24.0; // fixed-SNR commands
    double aperture_min_m = 0.01;
    double aperture_max_m = 0.20;
    int aperture_points = 20;
    int k_max = 30;
    std::vector<int> z_values = {1};

    // mc section
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 12345;
    unsigned workers = 1;
    std::string mc_metric = "outage"; // outage | capacity
};

RunConfig parse_config(std::istream& in, const std::string& source_name);
RunConfig parse_config_file(const std::string& path);

/// Emits the fully resolved configuration in the same format; feeding it back
/// reproduces identical outputs.
void write_resolved(std::ostream& out, const RunConfig& cfg);
std::string resolved_string(const RunConfig& cfg);

} // namespace satopt::config
