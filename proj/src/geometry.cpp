#include "satopt/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace satopt::geometry {

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

double elevation_from_zenith(double zenith_deg) {
    if (zenith_deg < 0.0 || zenith_deg > 90.0) {
        throw std::domain_error("zenith angle " + std::to_string(zenith_deg) +
                                " deg outside [0, 90]");
    }
    return 90.0 - zenith_deg;
}

double slant_path_m(double satellite_altitude_m, double gs_height_m,
                    double zenith_deg) {
    if (zenith_deg < 0.0 || zenith_deg >= 90.0) {
        throw std::domain_error("zenith angle " + std::to_string(zenith_deg) +
                                " deg outside [0, 90)");
    }
    if (satellite_altitude_m <= gs_height_m) {
        throw std::domain_error("satellite altitude must exceed GS height");
    }
    return (satellite_altitude_m - gs_height_m) /
           std::cos(deg_to_rad(zenith_deg));
}

PathGeometry make_path_geometry(double satellite_altitude_m,
                                double gs_height_above_ground_m,
                                double gs_height_above_sea_km,
                                double zenith_deg) {
    if (gs_height_above_ground_m < 0.0) {
        throw std::domain_error("GS height above ground must be >= 0");
    }
    if (gs_height_above_sea_km < 0.0 || gs_height_above_sea_km > 5.0) {
        throw std::domain_error(
            "GS height above sea level " +
            std::to_string(gs_height_above_sea_km) +
            " km outside the 0-5 km validity window");
    }
    PathGeometry g;
    g.satellite_altitude_m = satellite_altitude_m;
    g.gs_height_above_ground_m = gs_height_above_ground_m;
    g.gs_height_above_sea_km = gs_height_above_sea_km;
    g.zenith_angle_deg = zenith_deg;
    g.elevation_angle_deg = elevation_from_zenith(zenith_deg);
    g.slant_path_m =
        slant_path_m(satellite_altitude_m, gs_height_above_ground_m, zenith_deg);
    return g;
}

} // namespace satopt::geometry
