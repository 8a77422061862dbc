#include "satopt/fading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "satopt/quadrature.hpp"
#include "satopt/rng.hpp"

namespace satopt::fading {

namespace {
constexpr int kMinTerms = 10;
constexpr int kMaxTerms = 100000;
constexpr double kSeriesRelTol = 1e-12;
} // namespace

void validate(const EwParams& p) {
    if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !(p.eta > 0.0)) {
        throw std::domain_error("EW parameters must all be strictly positive");
    }
}

double ew_pdf(double irradiance, const EwParams& p) {
    if (irradiance < 0.0) throw std::domain_error("irradiance must be >= 0");
    if (irradiance == 0.0) {
        if (p.beta > 1.0) return 0.0;
        if (p.beta == 1.0 && p.alpha == 1.0) return 1.0 / p.eta;
        // beta < 1 (or alpha < 1 with beta == 1): density diverges at 0
        return std::numeric_limits<double>::infinity();
    }
    const double z = std::pow(irradiance / p.eta, p.beta);
    // exp(-z) beats any polynomial factor; avoid inf * 0 deep in the tail
    if (z > 800.0) return 0.0;
    const double base = -std::expm1(-z); // 1 - exp(-z)
    return p.alpha * p.beta / p.eta * std::pow(irradiance / p.eta, p.beta - 1.0) *
           std::exp(-z) * std::pow(base, p.alpha - 1.0);
}

double ew_cdf(double irradiance, const EwParams& p) {
    if (irradiance < 0.0) throw std::domain_error("irradiance must be >= 0");
    if (irradiance == 0.0) return 0.0;
    const double z = std::pow(irradiance / p.eta, p.beta);
    return std::pow(-std::expm1(-z), p.alpha);
}

double ew_log_cdf(double irradiance, const EwParams& p) {
    if (irradiance < 0.0) throw std::domain_error("irradiance must be >= 0");
    if (irradiance == 0.0) return -std::numeric_limits<double>::infinity();
    const double z = std::pow(irradiance / p.eta, p.beta);
    return p.alpha * std::log(-std::expm1(-z));
}

double ew_quantile(double u, const EwParams& p) {
    if (u < 0.0 || u >= 1.0) {
        throw std::domain_error("quantile argument must lie in [0, 1)");
    }
    if (u == 0.0) return 0.0;
    const double inner = std::pow(u, 1.0 / p.alpha);
    return p.eta * std::pow(-std::log1p(-inner), 1.0 / p.beta);
}

double gen_binom(double x, unsigned r) {
    double result = 1.0;
    for (unsigned i = 1; i <= r; ++i) {
        result *= (x - static_cast<double>(i) + 1.0) / static_cast<double>(i);
    }
    return result;
}

double ew_g(int n, double alpha, double beta) {
    // Product-form binomial avoids the Gamma-ratio poles at integer alpha.
    const double expo = 1.0 + static_cast<double>(n) / beta;
    double sum = 0.0;
    double binom = 1.0; // binom(alpha-1, 0)
    for (int k = 0; k < kMaxTerms; ++k) {
        const double term =
            ((k % 2 == 0) ? binom : -binom) / std::pow(k + 1.0, expo);
        sum += term;
        if (binom == 0.0) break; // integer alpha: series terminates exactly
        if (k >= kMinTerms && std::abs(term) < kSeriesRelTol * std::abs(sum)) {
            break;
        }
        binom *= (alpha - 1.0 - k) / (k + 1.0);
    }
    return sum;
}

namespace {

bool moment_series_ok(int n, double alpha, double beta) {
    // The alternating series cancels catastrophically once individual terms
    // dwarf the O(1/alpha) sum; cap the largest term magnitude so the
    // round-off floor stays below ~1e-8 of the result.
    const double expo = 1.0 + static_cast<double>(n) / beta;
    double binom = 1.0;
    double max_term = 1.0;
    for (int k = 0; k < 200; ++k) {
        binom *= (alpha - 1.0 - k) / (k + 1.0);
        if (binom == 0.0) break;
        max_term =
            std::max(max_term, std::abs(binom) / std::pow(k + 2.0, expo));
    }
    return max_term < 1e6 && std::abs(binom) < 1e6;
}

} // namespace

double ew_moment(int n, const EwParams& p) {
    if (n < 1) throw std::domain_error("moment order must be >= 1");
    validate(p);
    if (moment_series_ok(n, p.alpha, p.beta)) {
        return p.alpha * std::pow(p.eta, n) *
               std::tgamma(1.0 + static_cast<double>(n) / p.beta) *
               ew_g(n, p.alpha, p.beta);
    }
    auto integrand = [&](double irradiance) {
        const double density = ew_pdf(irradiance, p);
        if (density == 0.0) return 0.0; // keep inf * 0 out of the far tail
        return std::pow(irradiance, n) * density;
    };
    return quadrature::integrate_semi_infinite(integrand, 0.0, 1e-10);
}

EwSampler::EwSampler(const EwParams& p, std::uint64_t seed)
    : params_(p), state_(seed) {
    validate(p);
}

double EwSampler::operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return ew_quantile(rng::to_unit(rng::mix64(state_)), params_);
}

} // namespace satopt::fading
