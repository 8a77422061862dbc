#pragma once

#include "satopt/atmosphere.hpp"

namespace satopt {

/// One ground station: where it sits, what it looks through, and its receiver.
struct SiteConfig {
    double gs_height_above_ground_m = 0.0; // h0
    double gs_height_above_sea_km = 0.0;   // hE
    double zenith_angle_deg = 0.0;         // zeta
    double ground_wind_mps = 2.8;          // v_g
    atmosphere::CloudType cloud =
        atmosphere::cloud_preset(atmosphere::CloudClass::ThinCirrus);
    double aperture_diameter_m = 0.0; // D_G, 0 => point aperture
    double wavelength_nm = 1550.0;
    double kappa = 1.0; // share of the network average SNR
};

} // namespace satopt
