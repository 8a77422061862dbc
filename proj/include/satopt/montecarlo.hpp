#pragma once

#include <cstdint>

#include "satopt/analysis.hpp"

namespace satopt::montecarlo {

struct McConfig {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    analysis::NetworkConfig net;
};

struct McEstimate {
    double point_estimate = 0.0;
    double standard_error = 0.0;
    std::uint64_t trials_used = 0;
    double elapsed_s = 0.0;
    /// Outage only: fewer than 20 events observed, so the binomial standard
    /// error is meaningless and no estimate is reported.
    bool below_resolution = false;
    std::uint64_t events = 0;
};

/// Pr[max over all Z*K links of gamma <= gamma_th], estimated by seeded
/// inverse-transform draws. Identical (seed, net, trials) give bit-identical
/// results for any worker count.
McEstimate simulate_outage(const McConfig& cfg);

/// Sample mean of log2(1 + max gamma) over the same draw scheme.
McEstimate simulate_capacity(const McConfig& cfg);

/// Alias of simulate_outage; the engine already spans the constellation.
McEstimate simulate_constellation(const McConfig& cfg);

} // namespace satopt::montecarlo
