#pragma once

#include <cstdint>

namespace satopt::rng {

/// splitmix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based stream: one uniform per (seed, trial, satellite, site) key.
/// Stateless, so draws are independent of worker count and scheduling.
inline std::uint64_t link_key(std::uint64_t seed, std::uint64_t trial,
                              std::uint32_t satellite, std::uint32_t site) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ trial);
    h = mix64(h ^ ((std::uint64_t(satellite) << 32) | site));
    return h;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double to_unit(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline double uniform01(std::uint64_t seed, std::uint64_t trial,
                        std::uint32_t satellite, std::uint32_t site) {
    return to_unit(link_key(seed, trial, satellite, site));
}

} // namespace satopt::rng
