#pragma once

#include <optional>

#include "satopt/fading.hpp"
#include "satopt/geometry.hpp"

namespace satopt::turbulence {

/// Nominal refractive-index structure constant at ground level, m^(-2/3).
inline constexpr double kNominalCn2Ground = 1.7e-14;

/// r.m.s. wind speed sqrt(v_g^2 + 30.69 v_g + 348.91).
double rms_wind_speed(double ground_wind_mps);

struct TurbulenceEnvironment {
    double ground_wind_mps = 2.8;                  // v_g
    double rms_wind_mps = 0.0;                     // v_r
    double nominal_cn2_ground = kNominalCn2Ground; // C0
    geometry::PathGeometry geometry;
    double wavelength_nm = 1550.0;
    double wave_number_per_m = 0.0; // k = 2 pi / lambda
};

TurbulenceEnvironment make_environment(const geometry::PathGeometry& geom,
                                       double wavelength_nm,
                                       double ground_wind_mps,
                                       double cn2_ground = kNominalCn2Ground);

/// Altitude-dependent refractive-index structure profile C_n^2(h), h in m.
double cn2_profile(double altitude_m, double rms_wind_mps,
                   double cn2_ground = kNominalCn2Ground);

/// Rytov variance: 2.25 k^(7/6) sec^(11/6)(zeta) Int C_n^2(h) (h-h0)^(5/6) dh.
double rytov_variance(const TurbulenceEnvironment& env);

/// Point-aperture scintillation index from the Rytov variance.
double scintillation_index_point(double rytov_var);

/// Aperture-averaged scintillation index; aperture_diameter_m = 0 recovers the
/// point-like limit of the same integral.
double scintillation_index_aperture(const TurbulenceEnvironment& env,
                                    double aperture_diameter_m);

/// Atmospheric correlation width sqrt(45e3 sec(zeta) / k). Stated validity
/// is 0 <= zeta < 50 degrees.
double correlation_width_m(double zenith_deg, double wave_number_per_m);

/// Fits (alpha, beta, eta) from the scintillation index; the fitted scale
/// gives a unit-mean irradiance distribution.
fading::EwParams fit_ew_params(double scintillation_index);

struct ScintillationResult {
    double rytov_variance = 0.0;
    double scintillation_index = 0.0;
    double aperture_diameter_m = 0.0;
    std::optional<double> correlation_width_m; // absent when zeta >= 50 deg
};

/// Full per-site scintillation pipeline: point path for D_G = 0, the
/// aperture-averaged integral otherwise.
ScintillationResult scintillation(const TurbulenceEnvironment& env,
                                  double aperture_diameter_m);

} // namespace satopt::turbulence
