#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satopt/geometry.hpp"

namespace satopt {
struct SiteConfig;
}

namespace satopt::atmosphere {

enum class CloudClass {
    Cumulus,
    Stratus,
    Stratocumulus,
    Altostratus,
    Nimbostratus,
    Cirrus,
    ThinCirrus,
    Custom,
};

/// Cloud microphysics driving geometrical scattering: droplet number
/// concentration N (cm^-3) and liquid water content L_W (g/m^3).
struct CloudType {
    CloudClass cls = CloudClass::Custom;
    std::string name = "custom";
    double number_concentration_per_cm3 = 0.0;
    double liquid_water_g_per_m3 = 0.0;
};

CloudType cloud_preset(CloudClass cls);
const std::vector<CloudType>& cloud_presets();
/// Case-insensitive preset lookup ("thin_cirrus", "Thin cirrus", ...).
std::optional<CloudType> cloud_by_name(std::string_view name);
CloudType custom_cloud(double number_concentration_per_cm3,
                       double liquid_water_g_per_m3);

/// Wavelength-dependent polynomial coefficients of the Mie extinction-ratio
/// model. Valid for 0.8 <= lambda <= 2 um.
struct MieCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double wavelength_um = 0.0;
};

MieCoefficients mie_coefficients(double lambda_um);

/// Cubic in the GS height above sea level (km), 0 <= hE <= 5.
double extinction_ratio(double hE_km, const MieCoefficients& coeffs);

/// exp(-rho' / sin(theta)), theta in degrees, 0 < theta <= 90.
double mie_transmittance(double rho_prime, double elevation_deg);

/// Visibility V = 1.002 / (L_W * N)^0.6473 in km.
double visibility_km(double number_concentration_per_cm3,
                     double liquid_water_g_per_m3);

/// Kim's particle-size exponent, total on V >= 0. Branch boundaries are
/// half-open and lower-inclusive: [0,0.5) -> 0, [0.5,1) -> V-0.5,
/// [1,6) -> 0.16V+0.34, [6,50) -> 1.3, [50,inf) -> 1.6.
double kim_exponent(double visibility_km);

/// Theta = (3.91/V) * (lambda/550)^-psi(V), lambda in nm, V in km.
double attenuation_coefficient_per_km(double visibility_km, double lambda_nm);

/// Beer-Lambert transmittance exp(-Theta * L), L in km.
double geometric_transmittance(double theta_per_km, double path_km);

struct AttenuationBreakdown {
    double extinction_ratio = 0.0;          // rho'
    double mie_transmittance = 1.0;         // I^(m)
    double visibility_km = 0.0;             // V
    double size_exponent = 0.0;             // psi
    double attenuation_coeff_per_km = 0.0;  // Theta
    double geometric_transmittance = 1.0;   // I^(g)
    double total = 1.0;                     // I^(a) = I^(g) * I^(m)
};

/// Full deterministic attenuation I^(a) for one site along the given path.
AttenuationBreakdown total_attenuation(const SiteConfig& site,
                                       const geometry::PathGeometry& geom);

} // namespace satopt::atmosphere
