#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "satopt/montecarlo.hpp"
#include "satopt/rng.hpp"

using namespace satopt;

namespace {

analysis::NetworkConfig reference_net(int k, double gamma_bar, int z = 1) {
    analysis::NetworkConfig net;
    SiteConfig site;
    for (int i = 0; i < k; ++i) {
        net.sites.push_back(analysis::make_link_state(
            site, 0.24389321956573404,
            {3.24050221428191, 2.45795454257401, 0.805050123730588, {}}, 1.0,
            gamma_bar));
    }
    net.constellation_size = z;
    net.gamma_th = 5.011872336272722; // 7 dB
    net.gamma_bar = gamma_bar;
    return net;
}

} // namespace

TEST_CASE("counter rng produces uniform, key-separated draws") {
    // full-avalanche mix: distinct keys give unrelated values
    CHECK(rng::mix64(0) != rng::mix64(1));
    CHECK(rng::uniform01(1, 2, 3, 4) != rng::uniform01(1, 2, 4, 3));
    CHECK(rng::uniform01(1, 2, 3, 4) != rng::uniform01(2, 2, 3, 4));
    double sum = 0.0;
    for (std::uint64_t t = 0; t < 100000; ++t) {
        const double u = rng::uniform01(99, t, 0, 0);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("outage estimate matches the closed form at resolvable levels") {
    for (double gamma_bar : {100.0, 251.18864315095797}) {
        for (int k : {1, 2}) {
            const auto net = reference_net(k, gamma_bar);
            montecarlo::McConfig cfg{400000, 2024, 4, net};
            const auto est = montecarlo::simulate_outage(cfg);
            const double exact = analysis::outage_probability_exact(net);
            REQUIRE(!est.below_resolution);
            CHECK(est.standard_error > 0.0);
            CHECK(std::abs(est.point_estimate - exact) < 4.0 * est.standard_error);
            CHECK(est.trials_used == 400000);
        }
    }
}

TEST_CASE("estimates are bit-identical across worker counts") {
    const auto net = reference_net(2, 251.18864315095797, 2);
    double reference = -1.0;
    for (unsigned workers : {1u, 4u, 8u}) {
        montecarlo::McConfig cfg{300000, 777, workers, net};
        const auto est = montecarlo::simulate_outage(cfg);
        if (reference < 0.0) {
            reference = est.point_estimate;
        } else {
            CHECK(est.point_estimate == reference);
        }
    }
    // capacity path too
    double cap_ref = -1.0;
    for (unsigned workers : {1u, 8u}) {
        montecarlo::McConfig cfg{300000, 777, workers, net};
        const auto est = montecarlo::simulate_capacity(cfg);
        if (cap_ref < 0.0) {
            cap_ref = est.point_estimate;
        } else {
            CHECK(est.point_estimate == cap_ref);
        }
    }
}

TEST_CASE("different seeds decorrelate the estimate") {
    const auto net = reference_net(1, 100.0);
    montecarlo::McConfig a{200000, 1, 2, net};
    montecarlo::McConfig b{200000, 2, 2, net};
    CHECK(montecarlo::simulate_outage(a).point_estimate !=
          montecarlo::simulate_outage(b).point_estimate);
}

TEST_CASE("below-resolution outage is flagged") {
    // ~1e-12 outage at 40 dB: no events in 1e5 trials
    const auto net = reference_net(2, 1e4);
    montecarlo::McConfig cfg{100000, 5, 2, net};
    const auto est = montecarlo::simulate_outage(cfg);
    CHECK(est.below_resolution);
    CHECK(est.events < 20);
}

TEST_CASE("capacity estimate lands between the closed-form bounds") {
    const auto net = reference_net(2, 1000.0);
    montecarlo::McConfig cfg{400000, 99, 4, net};
    const auto est = montecarlo::simulate_capacity(cfg);
    const double b1 = analysis::capacity_bound_b1(net);
    const double b2 = analysis::capacity_bound_b2(net);
    CHECK(est.point_estimate > b1 - 3.0 * est.standard_error);
    CHECK(est.point_estimate < b2 + 3.0 * est.standard_error);
    CHECK(est.standard_error > 0.0);
    CHECK(est.elapsed_s >= 0.0);
}

TEST_CASE("constellation size enters the trial draws") {
    // more satellites -> strictly better selection -> lower outage
    double prev = 1.0;
    for (int z : {1, 2, 4}) {
        const auto net = reference_net(1, 100.0, z);
        montecarlo::McConfig cfg{400000, 4242, 4, net};
        const auto est = montecarlo::simulate_outage(cfg);
        CHECK(est.point_estimate < prev);
        prev = est.point_estimate;
    }
    CHECK(montecarlo::simulate_constellation(
              montecarlo::McConfig{1000, 1, 1, reference_net(1, 100.0, 2)})
              .trials_used == 1000);
}

TEST_CASE("invalid run parameters are rejected") {
    const auto net = reference_net(1, 100.0);
    CHECK_THROWS_AS(
        montecarlo::simulate_outage(montecarlo::McConfig{0, 1, 1, net}),
        std::domain_error);
    analysis::NetworkConfig bad = net;
    bad.gamma_th = -1.0;
    CHECK_THROWS_AS(
        montecarlo::simulate_outage(montecarlo::McConfig{1000, 1, 1, bad}),
        std::domain_error);
}

TEST_CASE("trial count not divisible by the block size still reduces cleanly") {
    const auto net = reference_net(1, 100.0);
    montecarlo::McConfig cfg{65537, 11, 3, net}; // one full block + 1 trial
    const auto est = montecarlo::simulate_outage(cfg);
    CHECK(est.trials_used == 65537);
    const double exact = analysis::outage_probability_exact(net);
    CHECK(std::abs(est.point_estimate - exact) < 5.0 * est.standard_error);
}
