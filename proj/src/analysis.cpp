#include "satopt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "satopt/quadrature.hpp"

namespace satopt::analysis {

namespace {

constexpr double kLn10 = 2.302585092994045684;
constexpr int kSeriesCap = 1000000;

/// (gamma / Omega)^(beta/2) for one link.
double snr_exponent_arg(double gamma, const LinkState& link) {
    return std::pow(gamma / link.omega, link.ew.beta / 2.0);
}

/// log F_{gamma_j}(gamma), stable in the deep tail.
double log_snr_cdf(double gamma, const LinkState& link) {
    if (gamma <= 0.0) return -std::numeric_limits<double>::infinity();
    const double t = snr_exponent_arg(gamma, link);
    return link.ew.alpha * std::log(-std::expm1(-t));
}

/// Survival function 1 - F_{gamma_j}(gamma), stable near both tails.
double snr_survival(double gamma, const LinkState& link) {
    if (gamma <= 0.0) return 1.0;
    return -std::expm1(log_snr_cdf(gamma, link));
}

} // namespace

LinkState make_link_state(const SiteConfig& site, double attenuation,
                          const fading::EwParams& ew, double kappa,
                          double gamma_bar) {
    if (!(attenuation > 0.0) || attenuation > 1.0) {
        throw std::domain_error("attenuation must lie in (0, 1]");
    }
    if (!(kappa > 0.0)) throw std::domain_error("kappa must be positive");
    if (!(gamma_bar > 0.0)) throw std::domain_error("gamma_bar must be positive");
    fading::validate(ew);
    LinkState link;
    link.site = site;
    link.attenuation = attenuation;
    link.ew = ew;
    link.kappa = kappa;
    const double scale = ew.eta * attenuation;
    link.omega = scale * scale * kappa * gamma_bar;
    return link;
}

void validate(const NetworkConfig& net) {
    if (net.sites.empty()) throw std::domain_error("network needs at least one site");
    if (net.constellation_size < 1) {
        throw std::domain_error("constellation size must be >= 1");
    }
    if (!(net.gamma_th > 0.0) || !(net.gamma_bar > 0.0)) {
        throw std::domain_error("gamma_th and gamma_bar must be positive");
    }
    for (const auto& link : net.sites) {
        fading::validate(link.ew);
        if (!(link.omega > 0.0)) throw std::domain_error("omega must be positive");
    }
}

bool homogeneous(const NetworkConfig& net) {
    const auto& first = net.sites.front();
    return std::all_of(net.sites.begin(), net.sites.end(), [&](const LinkState& l) {
        return l.ew.alpha == first.ew.alpha && l.ew.beta == first.ew.beta &&
               l.ew.eta == first.ew.eta && l.attenuation == first.attenuation &&
               l.kappa == first.kappa;
    });
}

NetworkConfig with_gamma_bar(const NetworkConfig& net, double gamma_bar) {
    NetworkConfig out = net;
    out.gamma_bar = gamma_bar;
    for (auto& link : out.sites) {
        link = make_link_state(link.site, link.attenuation, link.ew, link.kappa,
                               gamma_bar);
    }
    return out;
}

double snr_cdf(double gamma, const LinkState& link) {
    if (gamma <= 0.0) return 0.0;
    return std::exp(log_snr_cdf(gamma, link));
}

double outage_log(const NetworkConfig& net) {
    validate(net);
    double sum = 0.0;
    for (const auto& link : net.sites) {
        sum += log_snr_cdf(net.gamma_th, link);
    }
    return static_cast<double>(net.constellation_size) * sum;
}

double outage_probability_exact(const NetworkConfig& net) {
    return std::exp(outage_log(net));
}

double outage_probability_exact_log10(const NetworkConfig& net) {
    return outage_log(net) / kLn10;
}

double outage_probability_series(const NetworkConfig& net, double tol) {
    validate(net);
    if (!(tol > 0.0)) throw std::domain_error("series tolerance must be positive");
    if (net.constellation_size != 1) {
        throw std::domain_error("series form is defined for a single satellite");
    }
    double product = 1.0;
    for (const auto& link : net.sites) {
        const double t = snr_exponent_arg(net.gamma_th, link);
        const double alpha = link.ew.alpha;
        double sum = 1.0;  // rho = 0 term
        double binom = 1.0;
        bool converged = false;
        for (int rho = 1; rho < kSeriesCap; ++rho) {
            binom *= (alpha - rho + 1.0) / rho;
            const double term = binom * ((rho % 2 == 0) ? 1.0 : -1.0) *
                                std::exp(-static_cast<double>(rho) * t);
            sum += term;
            if (binom == 0.0 ||
                (rho > alpha && std::abs(term) < tol * std::max(std::abs(sum), 1e-300))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw std::runtime_error(
                "outage series terms failed to decay below tolerance; "
                "use the exact product form instead");
        }
        product *= sum;
    }
    return product;
}

double outage_asymptotic_log10(const NetworkConfig& net) {
    validate(net);
    double coeff_log10 = 0.0;
    double slope = 0.0;
    for (const auto& link : net.sites) {
        const double exponent = link.ew.alpha * link.ew.beta / 2.0;
        const double scale = link.ew.eta * link.attenuation;
        coeff_log10 -= exponent * std::log10(scale * scale * link.kappa);
        slope += exponent;
    }
    const double z = static_cast<double>(net.constellation_size);
    return z * (coeff_log10 + slope * std::log10(net.gamma_th / net.gamma_bar));
}

double outage_asymptotic(const NetworkConfig& net) {
    return std::pow(10.0, outage_asymptotic_log10(net));
}

double diversity_order(const NetworkConfig& net) {
    validate(net);
    double sum = 0.0;
    for (const auto& link : net.sites) {
        sum += link.ew.alpha * link.ew.beta / 2.0;
    }
    return sum;
}

double diversity_order_constellation(const NetworkConfig& net) {
    return static_cast<double>(net.constellation_size) * diversity_order(net);
}

double capacity_bound_b1(const NetworkConfig& net, double quad_tol) {
    validate(net);
    constexpr double kLog2E = 1.4426950408889634074;
    double best = 0.0;
    for (const auto& link : net.sites) {
        auto integrand = [&](double gamma) {
            return snr_survival(gamma, link) / (1.0 + gamma);
        };
        // The survival function drops sharply around Omega; split there so the
        // adaptive schemes see smooth pieces on each side.
        const double head =
            quadrature::integrate_finite(integrand, 0.0, link.omega, quad_tol);
        const double tail =
            quadrature::integrate_semi_infinite(integrand, link.omega, quad_tol);
        best = std::max(best, kLog2E * (head + tail));
    }
    return best;
}

double mean_max_snr_quadrature(const NetworkConfig& net) {
    validate(net);
    const double z = static_cast<double>(net.constellation_size);
    auto survival_max = [&](double gamma) {
        double log_cdf = 0.0;
        for (const auto& link : net.sites) {
            log_cdf += log_snr_cdf(gamma, link);
        }
        return -std::expm1(z * log_cdf);
    };
    const double omega_max =
        std::max_element(net.sites.begin(), net.sites.end(),
                         [](const LinkState& a, const LinkState& b) {
                             return a.omega < b.omega;
                         })
            ->omega;
    const double head =
        quadrature::integrate_finite(survival_max, 0.0, omega_max, 1e-10);
    const double tail =
        quadrature::integrate_semi_infinite(survival_max, omega_max, 1e-10);
    return head + tail;
}

double capacity_bound_b2(const NetworkConfig& net) {
    validate(net);
    if (!homogeneous(net)) {
        throw std::invalid_argument(
            "capacity bound B2 supports homogeneous networks only");
    }
    return std::log2(1.0 + mean_max_snr_quadrature(net));
}

double mean_max_snr_series(const NetworkConfig& net) {
    validate(net);
    if (!homogeneous(net)) {
        throw std::invalid_argument(
            "mean max-SNR series supports homogeneous networks only");
    }
    const auto& link = net.sites.front();
    const double upper = static_cast<double>(net.sites.size()) *
                         static_cast<double>(net.constellation_size) *
                         link.ew.alpha;
    const double beta = link.ew.beta;
    double sum = 0.0;
    double binom = 1.0;
    for (int rho = 1; rho < kSeriesCap; ++rho) {
        binom *= (upper - rho + 1.0) / rho;
        const double term = binom * ((rho % 2 == 0) ? -1.0 : 1.0) *
                            std::pow(static_cast<double>(rho), -2.0 / beta);
        sum += term;
        if (binom == 0.0 ||
            (rho > upper && std::abs(term) < 1e-14 * std::abs(sum))) {
            break;
        }
    }
    return sum * link.omega * std::tgamma(1.0 + 2.0 / beta);
}

} // namespace satopt::analysis
