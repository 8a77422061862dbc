#pragma once

#include <cstdint>
#include <optional>

namespace satopt::fading {

/// Exponentiated-Weibull irradiance fading parameters. alpha and beta are the
/// shape parameters, eta the scale. source_scintillation records the
/// scintillation index the fit came from, when applicable.
struct EwParams {
    double alpha = 1.0;
    double beta = 1.0;
    double eta = 1.0;
    std::optional<double> source_scintillation;
};

void validate(const EwParams& p);

double ew_pdf(double irradiance, const EwParams& p);
double ew_cdf(double irradiance, const EwParams& p);
/// log of the CDF, stable for deep-tail arguments.
double ew_log_cdf(double irradiance, const EwParams& p);
/// Analytic inverse of the CDF; u in [0, 1).
double ew_quantile(double u, const EwParams& p);

/// Generalized binomial coefficient with real upper index, computed as the
/// multiplicative product prod_{i=1..r} (x - i + 1)/i. Exact for integer x.
double gen_binom(double x, unsigned r);

/// Series constant g_n(alpha, beta) =
/// sum_k (-1)^k binom(alpha-1, k) / (k+1)^(1+n/beta).
/// Truncated when |term| < 1e-12 |partial sum| (10-term minimum, 1e5 cap).
double ew_g(int n, double alpha, double beta);

/// n-th raw moment E[I^n] = alpha eta^n Gamma(1+n/beta) g_n(alpha, beta).
/// Falls back to quadrature of I^n pdf(I) when the series terms fail to decay.
double ew_moment(int n, const EwParams& p);

/// Inverse-transform sampler. Owns its own stream state; instances must not be
/// shared across threads. Fixed seed reproduces the same sequence.
class EwSampler {
public:
    EwSampler(const EwParams& p, std::uint64_t seed);
    double operator()();

private:
    EwParams params_;
    std::uint64_t state_;
};

} // namespace satopt::fading
