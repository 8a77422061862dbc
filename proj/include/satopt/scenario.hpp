#pragma once

#include <span>
#include <string>
#include <vector>

#include "satopt/analysis.hpp"
#include "satopt/site.hpp"
#include "satopt/turbulence.hpp"

namespace satopt::scenario {

enum class PresetName { GroundLevel, HighGroundWindy, Custom };

/// Named deployment scenario: GS siting, wind, and the shared link defaults.
struct ScenarioPreset {
    PresetName name = PresetName::Custom;
    double gs_height_above_ground_m = 0.0;
    double gs_height_above_sea_km = 0.0;
    double ground_wind_mps = 2.8;
    double wavelength_nm = 1550.0;
    double satellite_altitude_m = 5e5;
    double gamma_th_db = 7.0;
    double cn2_ground = turbulence::kNominalCn2Ground;
};

ScenarioPreset ground_level();
ScenarioPreset high_ground_windy();
ScenarioPreset preset_by_name(const std::string& name);

double db_to_linear(double db);
double linear_to_db(double linear);

/// Everything derived from one site that does not depend on the average SNR.
struct SitePhysics {
    SiteConfig site;
    geometry::PathGeometry geom;
    atmosphere::AttenuationBreakdown attenuation;
    turbulence::ScintillationResult scint;
    fading::EwParams ew;
};

SitePhysics derive_site(const SiteConfig& site, double satellite_altitude_m,
                        double cn2_ground = turbulence::kNominalCn2Ground);

/// Assembles the network at a given (linear) threshold and average SNR.
analysis::NetworkConfig make_network(std::span<const SitePhysics> sites,
                                     int constellation_size, double gamma_th,
                                     double gamma_bar);

/// Applies scenario-level siting defaults to a site template.
SiteConfig apply_preset(const ScenarioPreset& preset, SiteConfig site);

} // namespace satopt::scenario
