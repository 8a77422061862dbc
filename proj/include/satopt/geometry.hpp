#pragma once

namespace satopt::geometry {

inline constexpr double kPi = 3.14159265358979323846;

double deg_to_rad(double deg);

/// Complement of the zenith angle, both in degrees. Valid for 0 <= zeta <= 90.
double elevation_from_zenith(double zenith_deg);

/// Plane-parallel slant path (H - h0) / cos(zeta). Requires H > h0 and
/// 0 <= zeta < 90 degrees.
double slant_path_m(double satellite_altitude_m, double gs_height_m,
                    double zenith_deg);

struct PathGeometry {
    double satellite_altitude_m = 0.0;     // H
    double gs_height_above_ground_m = 0.0; // h0
    double gs_height_above_sea_km = 0.0;   // hE
    double zenith_angle_deg = 0.0;         // zeta
    double elevation_angle_deg = 90.0;     // theta = 90 - zeta
    double slant_path_m = 0.0;             // L
};

/// Validates ranges (hE within the 0-5 km Mie window, zeta in [0, 90)) and
/// fills in the derived elevation angle and slant path.
PathGeometry make_path_geometry(double satellite_altitude_m,
                                double gs_height_above_ground_m,
                                double gs_height_above_sea_km,
                                double zenith_deg);

} // namespace satopt::geometry
