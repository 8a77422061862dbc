#pragma once

#include <vector>

#include "satopt/fading.hpp"
#include "satopt/site.hpp"

namespace satopt::analysis {

/// Per-site derived state used by the closed-form metrics.
/// omega = (eta * I^(a))^2 * kappa * gamma_bar is the per-site SNR scale.
struct LinkState {
    SiteConfig site;
    double attenuation = 1.0; // I^(a)
    fading::EwParams ew;
    double kappa = 1.0;
    double omega = 0.0;
};

LinkState make_link_state(const SiteConfig& site, double attenuation,
                          const fading::EwParams& ew, double kappa,
                          double gamma_bar);

struct NetworkConfig {
    std::vector<LinkState> sites;
    int constellation_size = 1; // Z; satellites are statistically identical
    double gamma_th = 0.0;      // linear
    double gamma_bar = 0.0;     // linear
};

void validate(const NetworkConfig& net);
bool homogeneous(const NetworkConfig& net);
/// Copy of the network at a different average SNR (omegas recomputed).
NetworkConfig with_gamma_bar(const NetworkConfig& net, double gamma_bar);

/// Per-site SNR CDF F_{gamma_j}(gamma) = (1 - exp[-(gamma/Omega_j)^(beta/2)])^alpha.
double snr_cdf(double gamma, const LinkState& link);

/// Natural log of the exact outage probability (sum of per-link log CDF
/// factors over all Z*K links); stable far below double underflow.
double outage_log(const NetworkConfig& net);

/// Exact selection-diversity outage probability (product of per-site CDF
/// factors, raised to the constellation size).
double outage_probability_exact(const NetworkConfig& net);
double outage_probability_exact_log10(const NetworkConfig& net);

/// Binomial-series form of the outage probability (Z = 1), truncated to tol.
double outage_probability_series(const NetworkConfig& net, double tol);

/// High-SNR power-law outage and its base-10 log.
double outage_asymptotic(const NetworkConfig& net);
double outage_asymptotic_log10(const NetworkConfig& net);

/// Diversity order sum_j alpha_j beta_j / 2 (single satellite).
double diversity_order(const NetworkConfig& net);
/// Constellation diversity order: the same sum over all Z*K links.
double diversity_order_constellation(const NetworkConfig& net);

/// Lower capacity bound: max_j E[log2(1 + gamma_j)], by quadrature of the
/// per-site complementary CDF.
double capacity_bound_b1(const NetworkConfig& net, double quad_tol = 1e-10);

/// Upper capacity bound log2(1 + E[max_j gamma_j]); homogeneous networks only.
double capacity_bound_b2(const NetworkConfig& net);

/// E[max_j gamma_j] by quadrature of the exact max-SNR survival function.
double mean_max_snr_quadrature(const NetworkConfig& net);
/// Alternating-series form of E[max_j gamma_j]; numerically stable only for
/// moderate K*alpha, kept as a cross-check.
double mean_max_snr_series(const NetworkConfig& net);

} // namespace satopt::analysis
