#include "satopt/atmosphere.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "satopt/site.hpp"

namespace satopt::atmosphere {

namespace {

std::string canonical(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == ' ' || c == '_' || c == '-') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace

CloudType cloud_preset(CloudClass cls) {
    switch (cls) {
    case CloudClass::Cumulus:       return {cls, "cumulus", 250.0, 1.0};
    case CloudClass::Stratus:       return {cls, "stratus", 250.0, 0.29};
    case CloudClass::Stratocumulus: return {cls, "stratocumulus", 250.0, 0.15};
    case CloudClass::Altostratus:   return {cls, "altostratus", 400.0, 0.41};
    case CloudClass::Nimbostratus:  return {cls, "nimbostratus", 200.0, 0.65};
    case CloudClass::Cirrus:        return {cls, "cirrus", 0.025, 0.06405};
    case CloudClass::ThinCirrus:    return {cls, "thin_cirrus", 0.5, 3.128e-4};
    case CloudClass::Custom:        break;
    }
    throw std::invalid_argument("custom clouds need explicit (N, L_W)");
}

const std::vector<CloudType>& cloud_presets() {
    static const std::vector<CloudType> presets = {
        cloud_preset(CloudClass::Cumulus),       cloud_preset(CloudClass::Stratus),
        cloud_preset(CloudClass::Stratocumulus), cloud_preset(CloudClass::Altostratus),
        cloud_preset(CloudClass::Nimbostratus),  cloud_preset(CloudClass::Cirrus),
        cloud_preset(CloudClass::ThinCirrus),
    };
    return presets;
}

std::optional<CloudType> cloud_by_name(std::string_view name) {
    const std::string key = canonical(name);
    for (const auto& c : cloud_presets()) {
        if (canonical(c.name) == key) return c;
    }
    if (key == "thincirrus") return cloud_preset(CloudClass::ThinCirrus);
    return std::nullopt;
}

CloudType custom_cloud(double n_per_cm3, double lw_g_per_m3) {
    if (n_per_cm3 <= 0.0 || lw_g_per_m3 <= 0.0) {
        throw std::domain_error("cloud N and L_W must be positive");
    }
    return {CloudClass::Custom, "custom", n_per_cm3, lw_g_per_m3};
}

MieCoefficients mie_coefficients(double lambda_um) {
    if (lambda_um < 0.8 || lambda_um > 2.0) {
        throw std::domain_error("wavelength " + std::to_string(lambda_um) +
                                " um outside the 0.8-2 um Mie band");
    }
    const double l = lambda_um;
    MieCoefficients c;
    c.a = -0.000545 * l * l + 0.002 * l - 0.0038;
    c.b = 0.00628 * l * l - 0.0232 * l + 0.0439;
    c.c = -0.028 * l * l + 0.101 * l - 0.18;
    c.d = -0.228 * l * l * l + 0.922 * l * l - 1.26 * l + 0.719;
    c.wavelength_um = l;
    return c;
}

double extinction_ratio(double hE_km, const MieCoefficients& coeffs) {
    if (hE_km < 0.0 || hE_km > 5.0) {
        throw std::domain_error("GS height " + std::to_string(hE_km) +
                                " km outside the 0-5 km validity window");
    }
    return ((coeffs.a * hE_km + coeffs.b) * hE_km + coeffs.c) * hE_km + coeffs.d;
}

double mie_transmittance(double rho_prime, double elevation_deg) {
    if (elevation_deg <= 0.0 || elevation_deg > 90.0) {
        throw std::domain_error("elevation angle must lie in (0, 90] deg");
    }
    if (rho_prime < 0.0) {
        throw std::domain_error("extinction ratio must be >= 0");
    }
    return std::exp(-rho_prime / std::sin(geometry::deg_to_rad(elevation_deg)));
}

double visibility_km(double n_per_cm3, double lw_g_per_m3) {
    if (n_per_cm3 <= 0.0 || lw_g_per_m3 <= 0.0) {
        throw std::domain_error("cloud N and L_W must be positive");
    }
    return 1.002 / std::pow(lw_g_per_m3 * n_per_cm3, 0.6473);
}

double kim_exponent(double v_km) {
    if (v_km < 0.0) throw std::domain_error("visibility must be >= 0");
    if (v_km >= 50.0) return 1.6;
    if (v_km >= 6.0) return 1.3;
    if (v_km >= 1.0) return 0.16 * v_km + 0.34;
    if (v_km >= 0.5) return v_km - 0.5;
    return 0.0;
}

double attenuation_coefficient_per_km(double v_km, double lambda_nm) {
    if (v_km <= 0.0) throw std::domain_error("visibility must be positive");
    return (3.91 / v_km) * std::pow(lambda_nm / 550.0, -kim_exponent(v_km));
}

double geometric_transmittance(double theta_per_km, double path_km) {
    if (theta_per_km < 0.0 || path_km < 0.0) {
        throw std::domain_error("attenuation coefficient and path must be >= 0");
    }
    return std::exp(-theta_per_km * path_km);
}

AttenuationBreakdown total_attenuation(const SiteConfig& site,
                                       const geometry::PathGeometry& geom) {
    AttenuationBreakdown out;
    const auto coeffs = mie_coefficients(site.wavelength_nm * 1e-3);
    out.extinction_ratio = extinction_ratio(geom.gs_height_above_sea_km, coeffs);
    out.mie_transmittance =
        mie_transmittance(out.extinction_ratio, geom.elevation_angle_deg);
    out.visibility_km = visibility_km(site.cloud.number_concentration_per_cm3,
                                      site.cloud.liquid_water_g_per_m3);
    out.size_exponent = kim_exponent(out.visibility_km);
    out.attenuation_coeff_per_km =
        attenuation_coefficient_per_km(out.visibility_km, site.wavelength_nm);
    out.geometric_transmittance = geometric_transmittance(
        out.attenuation_coeff_per_km, geom.slant_path_m * 1e-3);
    out.total = out.geometric_transmittance * out.mie_transmittance;
    return out;
}

} // namespace satopt::atmosphere
