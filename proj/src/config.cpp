#include "satopt/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace satopt::config {

namespace {

std::string trim(std::string_view s) {
    const auto* ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& source, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        fail(source, line, "expected a number, got '" + v + "'");
    }
}

long long parse_int(const std::string& source, int line, const std::string& v) {
    try {
        std::size_t pos = 0;
        const long long i = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        fail(source, line, "expected an integer, got '" + v + "'");
    }
}

struct SiteOverride {
    SiteConfig site;
    bool custom_cloud_n = false;
    bool custom_cloud_lw = false;
    double cloud_n = 0.0;
    double cloud_lw = 0.0;
    int line = 0;
};

} // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
    RunConfig cfg;
    std::string section;
    std::string line_buf;
    int line_no = 0;
    int site_count = 1;
    bool preset_seen = false;

    // scenario overrides are applied after the preset, in file order
    struct Override { std::string key; double value; int line; };
    std::vector<Override> scen_overrides;
    std::vector<SiteOverride> site_overrides;

    while (std::getline(in, line_buf)) {
        ++line_no;
        std::string line = line_buf;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(source, line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "network" && section != "site" &&
                section != "sweep" && section != "mc") {
                fail(source, line_no, "unknown section [" + section + "]");
            }
            if (section == "site") {
                SiteOverride ov;
                ov.line = line_no;
                site_overrides.push_back(ov);
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(source, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) fail(source, line_no, "empty key or value");

        if (section == "scenario") {
            if (key == "preset") {
                try {
                    cfg.scen = scenario::preset_by_name(value);
                } catch (const std::invalid_argument& e) {
                    fail(source, line_no, e.what());
                }
                cfg.preset_name = value;
                preset_seen = true;
            } else if (key == "wavelength_nm" || key == "satellite_altitude_m" ||
                       key == "h0_m" || key == "hE_km" || key == "wind_mps" ||
                       key == "cn2_ground" || key == "gamma_th_db") {
                scen_overrides.push_back({key, parse_double(source, line_no, value), line_no});
            } else {
                fail(source, line_no, "unknown scenario key '" + key + "'");
            }
        } else if (section == "network") {
            if (key == "count") {
                site_count = static_cast<int>(parse_int(source, line_no, value));
                if (site_count < 1) fail(source, line_no, "count must be >= 1");
            } else if (key == "constellation_size") {
                cfg.constellation_size = static_cast<int>(parse_int(source, line_no, value));
                if (cfg.constellation_size < 1) {
                    fail(source, line_no, "constellation_size must be >= 1");
                }
            } else if (key == "gamma_th_db") {
                cfg.gamma_th_db = parse_double(source, line_no, value);
            } else {
                fail(source, line_no, "unknown network key '" + key + "'");
            }
        } else if (section == "site") {
            auto& ov = site_overrides.back();
            if (key == "zenith_deg") {
                ov.site.zenith_angle_deg = parse_double(source, line_no, value);
            } else if (key == "cloud") {
                const auto cloud = atmosphere::cloud_by_name(value);
                if (!cloud) fail(source, line_no, "unknown cloud name '" + value + "'");
                ov.site.cloud = *cloud;
            } else if (key == "cloud_n_per_cm3") {
                ov.cloud_n = parse_double(source, line_no, value);
                ov.custom_cloud_n = true;
            } else if (key == "cloud_lw_g_per_m3") {
                ov.cloud_lw = parse_double(source, line_no, value);
                ov.custom_cloud_lw = true;
            } else if (key == "aperture_m") {
                ov.site.aperture_diameter_m = parse_double(source, line_no, value);
            } else if (key == "kappa") {
                ov.site.kappa = parse_double(source, line_no, value);
            } else {
                fail(source, line_no, "unknown site key '" + key + "'");
            }
        } else if (section == "sweep") {
            if (key == "start_db") cfg.sweep_start_db = parse_double(source, line_no, value);
            else if (key == "stop_db") cfg.sweep_stop_db = parse_double(source, line_no, value);
            else if (key == "step_db") cfg.sweep_step_db = parse_double(source, line_no, value);
            else if (key == "gamma_bar_db") cfg.gamma_bar_db = parse_double(source, line_no, value);
            else if (key == "aperture_min_m") cfg.aperture_min_m = parse_double(source, line_no, value);
            else if (key == "aperture_max_m") cfg.aperture_max_m = parse_double(source, line_no, value);
            else if (key == "aperture_points") cfg.aperture_points = static_cast<int>(parse_int(source, line_no, value));
            else if (key == "k_max") cfg.k_max = static_cast<int>(parse_int(source, line_no, value));
            else if (key == "z_values") {
                cfg.z_values.clear();
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    cfg.z_values.push_back(static_cast<int>(parse_int(source, line_no, trim(item))));
                }
                if (cfg.z_values.empty()) fail(source, line_no, "empty z_values list");
            } else {
                fail(source, line_no, "unknown sweep key '" + key + "'");
            }
        } else if (section == "mc") {
            if (key == "trials") {
                const auto t = parse_int(source, line_no, value);
                if (t < 1) fail(source, line_no, "trials must be >= 1");
                cfg.trials = static_cast<std::uint64_t>(t);
            } else if (key == "seed") {
                cfg.seed = static_cast<std::uint64_t>(parse_int(source, line_no, value));
            } else if (key == "workers") {
                const auto w = parse_int(source, line_no, value);
                if (w < 1) fail(source, line_no, "workers must be >= 1");
                cfg.workers = static_cast<unsigned>(w);
            } else if (key == "metric") {
                if (value != "outage" && value != "capacity") {
                    fail(source, line_no, "metric must be 'outage' or 'capacity'");
                }
                cfg.mc_metric = value;
            } else {
                fail(source, line_no, "unknown mc key '" + key + "'");
            }
        } else {
            fail(source, line_no, "key outside any section");
        }
    }

    if (!preset_seen) cfg.scen = scenario::ground_level();
    for (const auto& ov : scen_overrides) {
        if (ov.key == "wavelength_nm") cfg.scen.wavelength_nm = ov.value;
        else if (ov.key == "satellite_altitude_m") cfg.scen.satellite_altitude_m = ov.value;
        else if (ov.key == "h0_m") cfg.scen.gs_height_above_ground_m = ov.value;
        else if (ov.key == "hE_km") cfg.scen.gs_height_above_sea_km = ov.value;
        else if (ov.key == "wind_mps") cfg.scen.ground_wind_mps = ov.value;
        else if (ov.key == "cn2_ground") cfg.scen.cn2_ground = ov.value;
        else if (ov.key == "gamma_th_db") cfg.gamma_th_db = ov.value;
    }

    if (site_overrides.empty()) site_overrides.push_back({});
    if (site_count > 1 && site_overrides.size() > 1) {
        throw ConfigError(source + ": network count > 1 requires exactly one "
                          "[site] template");
    }

    for (auto& ov : site_overrides) {
        if (ov.custom_cloud_n != ov.custom_cloud_lw) {
            fail(source, ov.line,
                 "custom clouds need both cloud_n_per_cm3 and cloud_lw_g_per_m3");
        }
        if (ov.custom_cloud_n) {
            try {
                ov.site.cloud = atmosphere::custom_cloud(ov.cloud_n, ov.cloud_lw);
            } catch (const std::domain_error& e) {
                fail(source, ov.line, e.what());
            }
        }
        SiteConfig site = scenario::apply_preset(cfg.scen, ov.site);
        const int copies = site_overrides.size() == 1 ? site_count : 1;
        for (int i = 0; i < copies; ++i) cfg.sites.push_back(site);
    }
    if (cfg.sites.empty()) {
        throw ConfigError(source + ": configuration resolves to an empty site list");
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

namespace {

// %.17g round-trips doubles exactly, so the echo reproduces the run bit-for-bit
void put(std::ostream& out, const char* key, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << key << " = " << buf << '\n';
}

} // namespace

void write_resolved(std::ostream& out, const RunConfig& cfg) {
    out << "[scenario]\n";
    out << "preset = " << cfg.preset_name << '\n';
    put(out, "wavelength_nm", cfg.scen.wavelength_nm);
    put(out, "satellite_altitude_m", cfg.scen.satellite_altitude_m);
    put(out, "h0_m", cfg.scen.gs_height_above_ground_m);
    put(out, "hE_km", cfg.scen.gs_height_above_sea_km);
    put(out, "wind_mps", cfg.scen.ground_wind_mps);
    put(out, "cn2_ground", cfg.scen.cn2_ground);
    out << '\n';
    out << "[network]\n";
    out << "count = 1\n";
    out << "constellation_size = " << cfg.constellation_size << '\n';
    put(out, "gamma_th_db", cfg.gamma_th_db);
    out << '\n';
    for (const auto& site : cfg.sites) {
        out << "[site]\n";
        put(out, "zenith_deg", site.zenith_angle_deg);
        if (site.cloud.cls == atmosphere::CloudClass::Custom) {
            put(out, "cloud_n_per_cm3", site.cloud.number_concentration_per_cm3);
            put(out, "cloud_lw_g_per_m3", site.cloud.liquid_water_g_per_m3);
        } else {
            out << "cloud = " << site.cloud.name << '\n';
        }
        put(out, "aperture_m", site.aperture_diameter_m);
        put(out, "kappa", site.kappa);
        out << '\n';
    }
    out << "[sweep]\n";
    put(out, "start_db", cfg.sweep_start_db);
    put(out, "stop_db", cfg.sweep_stop_db);
    put(out, "step_db", cfg.sweep_step_db);
    put(out, "gamma_bar_db", cfg.gamma_bar_db);
    put(out, "aperture_min_m", cfg.aperture_min_m);
    put(out, "aperture_max_m", cfg.aperture_max_m);
    out << "aperture_points = " << cfg.aperture_points << '\n';
    out << "k_max = " << cfg.k_max << '\n';
    out << "z_values = ";
    for (std::size_t i = 0; i < cfg.z_values.size(); ++i) {
        if (i > 0) out << ',';
        out << cfg.z_values[i];
    }
    out << "\n\n";
    out << "[mc]\n";
    out << "trials = " << cfg.trials << '\n';
    out << "seed = " << cfg.seed << '\n';
    out << "workers = " << cfg.workers << '\n';
    out << "metric = " << cfg.mc_metric << '\n';
}

std::string resolved_string(const RunConfig& cfg) {
    std::ostringstream os;
    write_resolved(os, cfg);
    return os.str();
}

} // namespace satopt::config
