#include "satopt/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace satopt::scenario {

ScenarioPreset ground_level() {
    ScenarioPreset p;
    p.name = PresetName::GroundLevel;
    p.gs_height_above_ground_m = 0.0;
    p.gs_height_above_sea_km = 0.0;
    p.ground_wind_mps = 2.8;
    return p;
}

ScenarioPreset high_ground_windy() {
    ScenarioPreset p;
    p.name = PresetName::HighGroundWindy;
    p.gs_height_above_ground_m = 1000.0;
    p.gs_height_above_sea_km = 1.2;
    p.ground_wind_mps = 11.176;
    return p;
}

ScenarioPreset preset_by_name(const std::string& name) {
    if (name == "ground_level") return ground_level();
    if (name == "high_ground_windy") return high_ground_windy();
    if (name == "custom") return ScenarioPreset{};
    throw std::invalid_argument("unknown scenario preset '" + name + "'");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
    if (!(linear > 0.0)) throw std::domain_error("dB of a non-positive value");
    return 10.0 * std::log10(linear);
}

SitePhysics derive_site(const SiteConfig& site, double satellite_altitude_m,
                        double cn2_ground) {
    SitePhysics out;
    out.site = site;
    out.geom = geometry::make_path_geometry(
        satellite_altitude_m, site.gs_height_above_ground_m,
        site.gs_height_above_sea_km, site.zenith_angle_deg);
    out.attenuation = atmosphere::total_attenuation(site, out.geom);
    const auto env = turbulence::make_environment(
        out.geom, site.wavelength_nm, site.ground_wind_mps, cn2_ground);
    out.scint = turbulence::scintillation(env, site.aperture_diameter_m);
    out.ew = turbulence::fit_ew_params(out.scint.scintillation_index);
    return out;
}

analysis::NetworkConfig make_network(std::span<const SitePhysics> sites,
                                     int constellation_size, double gamma_th,
                                     double gamma_bar) {
    analysis::NetworkConfig net;
    net.constellation_size = constellation_size;
    net.gamma_th = gamma_th;
    net.gamma_bar = gamma_bar;
    net.sites.reserve(sites.size());
    for (const auto& sp : sites) {
        net.sites.push_back(analysis::make_link_state(
            sp.site, sp.attenuation.total, sp.ew, sp.site.kappa, gamma_bar));
    }
    analysis::validate(net);
    return net;
}

SiteConfig apply_preset(const ScenarioPreset& preset, SiteConfig site) {
    site.gs_height_above_ground_m = preset.gs_height_above_ground_m;
    site.gs_height_above_sea_km = preset.gs_height_above_sea_km;
    site.ground_wind_mps = preset.ground_wind_mps;
    site.wavelength_nm = preset.wavelength_nm;
    return site;
}

} // namespace satopt::scenario
