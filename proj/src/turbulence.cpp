#include "satopt/turbulence.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "satopt/quadrature.hpp"

namespace satopt::turbulence {

double rms_wind_speed(double ground_wind_mps) {
    if (ground_wind_mps < 0.0) {
        throw std::domain_error("ground wind speed must be >= 0");
    }
    return std::sqrt(ground_wind_mps * ground_wind_mps +
                     30.69 * ground_wind_mps + 348.91);
}

TurbulenceEnvironment make_environment(const geometry::PathGeometry& geom,
                                       double wavelength_nm,
                                       double ground_wind_mps,
                                       double cn2_ground) {
    if (wavelength_nm <= 0.0) throw std::domain_error("wavelength must be positive");
    TurbulenceEnvironment env;
    env.ground_wind_mps = ground_wind_mps;
    env.rms_wind_mps = rms_wind_speed(ground_wind_mps);
    env.nominal_cn2_ground = cn2_ground;
    env.geometry = geom;
    env.wavelength_nm = wavelength_nm;
    env.wave_number_per_m = 2.0 * geometry::kPi / (wavelength_nm * 1e-9);
    return env;
}

double cn2_profile(double altitude_m, double rms_wind_mps, double cn2_ground) {
    if (altitude_m < 0.0) throw std::domain_error("altitude must be >= 0");
    const double h = altitude_m;
    const double w = rms_wind_mps / 27.0;
    return 0.00594 * w * w * std::pow(1e-5 * h, 10.0) * std::exp(-h / 1000.0) +
           2.7e-16 * std::exp(-h / 1500.0) + cn2_ground * std::exp(-h / 100.0);
}

namespace {

double sec_pow_11_6(double zenith_deg) {
    const double c = std::cos(geometry::deg_to_rad(zenith_deg));
    return std::pow(1.0 / c, 11.0 / 6.0);
}

// The profile integrand has a sharp spike in the first ~100 m (ground term)
// and a broad peak near 10 km (wind term); integrating the full path in one
// tanh_sinh pass clusters nodes at the endpoints and loses ~5 digits. Split
// at scale-height breakpoints so every feature sits next to a panel edge.
template <typename F>
double integrate_profile(F&& integrand, double h0, double top) {
    const double offsets[] = {1e2, 1e3, 1e4, 3e4, 1e5};
    double lo = h0;
    double total = 0.0;
    for (double off : offsets) {
        const double hi = h0 + off;
        if (hi >= top) break;
        total += quadrature::integrate_finite(integrand, lo, hi,
                                              quadrature::kDefaultRelTol);
        lo = hi;
    }
    total += quadrature::integrate_finite(integrand, lo, top,
                                          quadrature::kDefaultRelTol);
    return total;
}

} // namespace

double rytov_variance(const TurbulenceEnvironment& env) {
    const auto& g = env.geometry;
    if (g.zenith_angle_deg >= 90.0 ||
        g.satellite_altitude_m <= g.gs_height_above_ground_m) {
        throw std::domain_error("invalid geometry for Rytov variance");
    }
    const double h0 = g.gs_height_above_ground_m;
    auto integrand = [&](double h) {
        return cn2_profile(h, env.rms_wind_mps, env.nominal_cn2_ground) *
               std::pow(h - h0, 5.0 / 6.0);
    };
    const double integral =
        integrate_profile(integrand, h0, g.satellite_altitude_m);
    return 2.25 * std::pow(env.wave_number_per_m, 7.0 / 6.0) *
           sec_pow_11_6(g.zenith_angle_deg) * integral;
}

double scintillation_index_point(double rytov_var) {
    if (rytov_var < 0.0) throw std::domain_error("Rytov variance must be >= 0");
    if (rytov_var == 0.0) return 0.0;
    const double r125 = std::pow(rytov_var, 6.0 / 5.0); // sigma_R^(12/5)
    const double first =
        0.49 * rytov_var / std::pow(1.0 + 1.11 * r125, 7.0 / 6.0);
    const double second =
        0.51 * rytov_var / std::pow(1.0 + 0.69 * r125, 5.0 / 6.0);
    return std::expm1(first + second);
}

double scintillation_index_aperture(const TurbulenceEnvironment& env,
                                    double aperture_diameter_m) {
    if (aperture_diameter_m < 0.0) {
        throw std::domain_error("aperture diameter must be >= 0");
    }
    const auto& g = env.geometry;
    const double h0 = g.gs_height_above_ground_m;
    const double span = g.satellite_altitude_m - h0;
    if (span <= 0.0 || g.zenith_angle_deg >= 90.0) {
        throw std::domain_error("invalid geometry for aperture averaging");
    }
    const double k = env.wave_number_per_m;
    // kD^2/(16L); argument has positive real part, principal branch unambiguous
    const double a =
        k * aperture_diameter_m * aperture_diameter_m / (16.0 * g.slant_path_m);
    const double a56 = std::pow(a, 5.0 / 6.0);
    auto integrand = [&](double h) {
        const std::complex<double> z(a, (h - h0) / span);
        return cn2_profile(h, env.rms_wind_mps, env.nominal_cn2_ground) *
               (std::pow(z, 5.0 / 6.0).real() - a56);
    };
    const double integral =
        integrate_profile(integrand, h0, g.satellite_altitude_m);
    return 8.7 * std::pow(k, 7.0 / 6.0) * std::pow(span, 5.0 / 6.0) *
           sec_pow_11_6(g.zenith_angle_deg) * integral;
}

double correlation_width_m(double zenith_deg, double wave_number_per_m) {
    if (zenith_deg < 0.0 || zenith_deg >= 50.0) {
        throw std::domain_error("correlation width valid for 0 <= zeta < 50 deg");
    }
    if (wave_number_per_m <= 0.0) {
        throw std::domain_error("wave number must be positive");
    }
    return std::sqrt(45e3 / (std::cos(geometry::deg_to_rad(zenith_deg)) *
                             wave_number_per_m));
}

fading::EwParams fit_ew_params(double scintillation_index) {
    if (!(scintillation_index > 0.0)) {
        throw std::domain_error("scintillation index must be positive");
    }
    const double s2 = scintillation_index;
    const double gamma_arg = 2.487 * std::pow(s2, 1.0 / 6.0) - 0.104;
    if (gamma_arg <= 0.0) {
        throw std::runtime_error(
            "EW fit gamma argument " + std::to_string(gamma_arg) +
            " at or below zero (scintillation index too small)");
    }
    fading::EwParams p;
    p.alpha = 7.220 * std::cbrt(s2) / std::tgamma(gamma_arg);
    p.beta = 1.012 * std::pow(p.alpha * s2, -13.0 / 25.0) + 0.142;
    p.eta = 1.0 / (p.alpha * std::tgamma(1.0 + 1.0 / p.beta) *
                   fading::ew_g(1, p.alpha, p.beta));
    p.source_scintillation = s2;
    fading::validate(p);
    return p;
}

ScintillationResult scintillation(const TurbulenceEnvironment& env,
                                  double aperture_diameter_m) {
    ScintillationResult out;
    out.rytov_variance = rytov_variance(env);
    out.aperture_diameter_m = aperture_diameter_m;
    if (aperture_diameter_m > 0.0) {
        out.scintillation_index =
            scintillation_index_aperture(env, aperture_diameter_m);
    } else {
        out.scintillation_index = scintillation_index_point(out.rytov_variance);
    }
    if (env.geometry.zenith_angle_deg < 50.0) {
        out.correlation_width_m = correlation_width_m(
            env.geometry.zenith_angle_deg, env.wave_number_per_m);
    }
    return out;
}

} // namespace satopt::turbulence
