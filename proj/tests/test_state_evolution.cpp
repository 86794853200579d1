#include <doctest.h>

#include <cmath>

#include "ampcap/scalar_mmse.hpp"
#include "ampcap/state_evolution.hpp"

using namespace ampcap;

namespace {

TransferCurve gaussian_omega() {
    return TransferCurve::from_function([](double rho) { return 1.0 / (1.0 + rho); });
}

// Dense-grid sign-change bisection of omega(rho) - phi_inv(rho), used as an
// independent oracle for the iterated fixed point.
double bisect_crossing(const SystemConfig& cfg, const TransferCurve& omega) {
    auto g = [&](double rho) { return omega(rho) - phi_inv(cfg, rho); };
    const auto grid = TransferCurve::log_grid(phi(cfg, 1.0) * 0.999, cfg.snr(), 20000);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (g(grid[i - 1]) < 0.0 && g(grid[i]) >= 0.0) {
            double a = grid[i - 1], b = grid[i];
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                (g(mid) < 0.0 ? a : b) = mid;
            }
            return 0.5 * (a + b);
        }
    }
    return -1.0;
}

}  // namespace

TEST_CASE("phi direct values") {
    CHECK(phi({1.0, 0.5}, 0.5) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phi({2.0, 0.1}, 1.0) == doctest::Approx(1.0 / 2.1).epsilon(1e-14));
    const SystemConfig cfg{0.7, 0.25};
    CHECK(phi(cfg, 0.0) == doctest::Approx(cfg.snr()).epsilon(1e-14));
}

TEST_CASE("phi_inv direct values and round trip") {
    CHECK(phi_inv({1.0, 0.5}, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(phi_inv({1.5, 0.2}, 0.5) == doctest::Approx(1.2).epsilon(1e-14));
    const SystemConfig cfg{1.3, 0.37};
    CHECK(phi_inv(cfg, cfg.snr()) == doctest::Approx(0.0));
    for (double rho : {0.1, 0.5, 2.0})
        CHECK(phi(cfg, phi_inv(cfg, rho)) == doctest::Approx(rho).epsilon(1e-12));
    CHECK_THROWS_AS((void)phi_inv(cfg, cfg.snr() * 1.01), std::domain_error);
    CHECK_THROWS_AS((void)phi_inv(cfg, 0.0), std::domain_error);
    CHECK_THROWS_AS((void)phi(cfg, -0.1), std::domain_error);
}

TEST_CASE("se fixed point: gaussian beta=1 sigma2=1 hits the golden ratio") {
    const SystemConfig cfg{1.0, 1.0};
    const auto res = se_fixed_point(cfg, gaussian_omega());
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    CHECK(res.rho_star == doctest::Approx(golden).epsilon(1e-9));
    CHECK(res.v_star == doctest::Approx(golden).epsilon(1e-9));
}

TEST_CASE("se fixed point: beta -> 0 gives rho* = snr") {
    const SystemConfig cfg{1e-12, 0.25};
    const auto res = se_fixed_point(cfg, gaussian_omega());
    CHECK(res.rho_star == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("se fixed point: qpsk beta=1.5 at 5.38 dB matches bisection oracle") {
    ScalarMmse sm(Constellation::qpsk());
    const auto cfg = SystemConfig::from_snr_db(1.5, 5.38);
    const auto res = se_fixed_point(cfg, sm.dense_curve());
    const double ref = bisect_crossing(cfg, sm.dense_curve());
    REQUIRE(ref > 0.0);
    CHECK(res.rho_star == doctest::Approx(ref).epsilon(1e-8));
    // fixed-point consistency
    CHECK(std::abs(sm.dense_curve()(res.rho_star) - res.v_star) < 1e-10);
    CHECK(std::abs(phi(cfg, res.v_star) - res.rho_star) < 1e-10 * res.rho_star);
}

TEST_CASE("se trace is monotone when started from v0 = 1") {
    ScalarMmse sm(Constellation::qpsk());
    for (double snr_db : {-3.0, 5.0, 12.0}) {
        const auto cfg = SystemConfig::from_snr_db(1.2, snr_db);
        const auto res = se_fixed_point(cfg, sm.dense_curve());
        double prev_rho = 0.0, prev_v = 1.0 + 1e-15;
        for (const auto& p : res.trace) {
            CHECK(p.rho >= prev_rho - 1e-12);
            CHECK(p.v <= prev_v + 1e-12);
            prev_rho = p.rho;
            prev_v = p.v;
        }
    }
}

TEST_CASE("se residual postcondition") {
    ScalarMmse sm(Constellation::qam16());
    const auto cfg = SystemConfig::from_snr_db(0.8, 7.0);
    const auto res = se_fixed_point(cfg, sm.dense_curve());
    CHECK(std::abs(sm.dense_curve()(res.rho_star) - phi_inv(cfg, res.rho_star)) < 1e-10);
}

TEST_CASE("single crossing: gaussian always has exactly one") {
    for (double beta : {0.3, 1.0, 2.5})
        for (double snr_db : {-5.0, 3.0, 15.0}) {
            const auto cfg = SystemConfig::from_snr_db(beta, snr_db);
            const auto rep = single_crossing_check(cfg, gaussian_omega());
            CHECK(rep.holds);
            REQUIRE(rep.crossings.size() == 1);
            // crossing solves omega = phi_inv
            const double rho = rep.crossings[0];
            CHECK(std::abs(1.0 / (1.0 + rho) - phi_inv(cfg, rho)) < 1e-7);
        }
}

TEST_CASE("single crossing: omega == 0 reports none") {
    const auto zero = TransferCurve::from_function([](double) { return 0.0; });
    const auto rep = single_crossing_check({1.0, 0.1}, zero);
    CHECK(!rep.holds);
    CHECK(rep.crossings.empty());
}

TEST_CASE("single crossing: qpsk beta=1 at 10 dB holds") {
    ScalarMmse sm(Constellation::qpsk());
    const auto cfg = SystemConfig::from_snr_db(1.0, 10.0);
    const auto rep = single_crossing_check(cfg, sm.dense_curve());
    CHECK(rep.holds);
}

TEST_CASE("iteration limit raises with trace attached") {
    // A (non-monotone) curve that locks the iteration into a 2-cycle:
    // v = 1 -> rho ~ 0.91 -> v = 0.1 -> rho = 5 -> v = 0.9 -> rho = 1 -> ...
    const auto bouncy =
        TransferCurve::from_function([](double rho) { return rho > 2.0 ? 0.9 : 0.1; });
    const SystemConfig cfg{1.0, 0.1};
    try {
        (void)se_fixed_point(cfg, bouncy, {1e-12, 1e-10, 50});
        FAIL("expected IterationLimitError");
    } catch (const IterationLimitError& e) {
        CHECK(e.trace().size() == 50);
    }
}
