#include "satopt/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "satopt/fading.hpp"
#include "satopt/rng.hpp"

namespace satopt::montecarlo {

namespace {

// Fixed block size keeps the reduction order independent of the worker count.
constexpr std::uint64_t kBlockTrials = 1 << 16;
constexpr std::uint64_t kMinOutageEvents = 20;

struct LinkDraw {
    double inv_alpha;
    double two_over_beta;
    double snr_scale; // kappa * gamma_bar * (I^(a) * eta)^2 = Omega
};

struct BlockResult {
    std::uint64_t outage_events = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
};

std::vector<LinkDraw> prepare_links(const analysis::NetworkConfig& net) {
    std::vector<LinkDraw> links;
    links.reserve(net.sites.size());
    for (const auto& link : net.sites) {
        const double scale = link.attenuation * link.ew.eta;
        links.push_back({1.0 / link.ew.alpha, 2.0 / link.ew.beta,
                         link.kappa * net.gamma_bar * scale * scale});
    }
    return links;
}

/// gamma for one link draw: Omega * (-log(1 - u^(1/alpha)))^(2/beta).
double draw_snr(double u, const LinkDraw& link) {
    const double inner = std::pow(u, link.inv_alpha);
    return link.snr_scale * std::pow(-std::log1p(-inner), link.two_over_beta);
}

template <typename PerTrial>
void run_blocks(const McConfig& cfg, std::vector<BlockResult>& results,
                PerTrial per_trial) {
    const std::uint64_t n_blocks = results.size();
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t b = next.fetch_add(1); b < n_blocks;
             b = next.fetch_add(1)) {
            const std::uint64_t begin = b * kBlockTrials;
            const std::uint64_t end =
                std::min(begin + kBlockTrials, cfg.trials);
            BlockResult block;
            for (std::uint64_t trial = begin; trial < end; ++trial) {
                per_trial(trial, block);
            }
            results[b] = block;
        }
    };
    const unsigned workers = std::max(1u, cfg.workers);
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

McEstimate run(const McConfig& cfg, bool capacity_mode) {
    analysis::validate(cfg.net);
    if (cfg.trials < 1) throw std::domain_error("trial count must be >= 1");
    if (cfg.workers < 1) throw std::domain_error("worker count must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    const auto links = prepare_links(cfg.net);
    const auto n_sites = static_cast<std::uint32_t>(links.size());
    const auto n_sats = static_cast<std::uint32_t>(cfg.net.constellation_size);
    const double gamma_th = cfg.net.gamma_th;

    const std::uint64_t n_blocks =
        (cfg.trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockResult> results(n_blocks);

    run_blocks(cfg, results, [&](std::uint64_t trial, BlockResult& block) {
        double gamma_max = 0.0;
        for (std::uint32_t z = 0; z < n_sats; ++z) {
            for (std::uint32_t j = 0; j < n_sites; ++j) {
                const double u = rng::uniform01(cfg.seed, trial, z, j);
                const double gamma = draw_snr(u, links[j]);
                if (gamma > gamma_max) gamma_max = gamma;
            }
        }
        if (capacity_mode) {
            const double c = std::log2(1.0 + gamma_max);
            block.sum += c;
            block.sum_sq += c * c;
        } else if (gamma_max <= gamma_th) {
            ++block.outage_events;
        }
    });

    // Reduce in block order so the result is independent of scheduling.
    std::uint64_t events = 0;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& block : results) {
        events += block.outage_events;
        sum += block.sum;
        sum_sq += block.sum_sq;
    }

    McEstimate est;
    est.trials_used = cfg.trials;
    est.events = events;
    const double n = static_cast<double>(cfg.trials);
    if (capacity_mode) {
        est.point_estimate = sum / n;
        const double var =
            cfg.trials > 1
                ? std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0))
                : 0.0;
        est.standard_error = std::sqrt(var / n);
    } else {
        const double p = static_cast<double>(events) / n;
        est.point_estimate = p;
        est.standard_error = std::sqrt(p * (1.0 - p) / n);
        est.below_resolution = events < kMinOutageEvents;
    }
    est.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return est;
}

} // namespace

McEstimate simulate_outage(const McConfig& cfg) { return run(cfg, false); }

McEstimate simulate_capacity(const McConfig& cfg) { return run(cfg, true); }

McEstimate simulate_constellation(const McConfig& cfg) {
    return simulate_outage(cfg);
}

} // namespace satopt::montecarlo
