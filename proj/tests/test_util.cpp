#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ampcap/quadrature.hpp"
#include "ampcap/rng.hpp"
#include "ampcap/transfer_curve.hpp"

using namespace ampcap;

TEST_CASE("gauss-hermite moments") {
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    for (int order : {2, 7, 16, 40, 61}) {
        const auto& gh = gauss_hermite(order);
        REQUIRE(gh.nodes.size() == (size_t)order);
        double m0 = 0, m2 = 0, m4 = 0;
        for (int i = 0; i < order; ++i) {
            m0 += gh.weights[i];
            m2 += gh.weights[i] * gh.nodes[i] * gh.nodes[i];
            m4 += gh.weights[i] * std::pow(gh.nodes[i], 4);
        }
        CHECK(m0 == doctest::Approx(sqrt_pi).epsilon(1e-12));
        if (order >= 2) CHECK(m2 == doctest::Approx(sqrt_pi / 2).epsilon(1e-12));
        if (order >= 3) CHECK(m4 == doctest::Approx(3 * sqrt_pi / 4).epsilon(1e-12));
    }
}

TEST_CASE("gauss-hermite two-point rule") {
    const auto& gh = gauss_hermite(2);
    CHECK(std::abs(gh.nodes[0]) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(gh.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-12));
}

TEST_CASE("rng determinism and moments") {
    GaussianSampler a(1234), b(1234);
    for (int i = 0; i < 100; ++i) REQUIRE(a.bits() == b.bits());

    GaussianSampler g(42);
    const int n = 200000;
    double sum = 0, sum2 = 0, sum4 = 0;
    for (int i = 0; i < n; ++i) {
        const double x = g.normal();
        sum += x;
        sum2 += x * x;
        sum4 += x * x * x * x;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(sum4 / n == doctest::Approx(3.0).epsilon(0.05));

    double cn_var = 0;
    for (int i = 0; i < n; ++i) cn_var += std::norm(g.complex_normal());
    CHECK(cn_var / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("derive_seed decorrelates streams") {
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("transfer curve interpolation and rules") {
    auto c = TransferCurve::from_samples({1.0, 2.0, 4.0}, {0.8, 0.4, 0.2},
                                         TransferCurve::RightRule::ScaledInverse);
    CHECK(c(1.0) == doctest::Approx(0.8));
    CHECK(c(1.5) == doctest::Approx(0.6));
    CHECK(c(0.1) == doctest::Approx(0.8));  // hold left
    CHECK(c(4.0) == doctest::Approx(0.2));
    // scaled-inverse tail: v(9) = 0.2 * 5 / 10
    CHECK(c(9.0) == doctest::Approx(0.1));

    auto z = TransferCurve::from_samples({1.0, 2.0}, {0.5, 0.0},
                                         TransferCurve::RightRule::Zero);
    CHECK(z(3.0) == 0.0);
    CHECK(z(2.0) == 0.0);
}

TEST_CASE("transfer curve integral matches hand computation") {
    auto c = TransferCurve::from_samples({1.0, 3.0}, {1.0, 0.5},
                                         TransferCurve::RightRule::Zero);
    // held [0,1]: 1.0; trapezoid [1,3]: 1.5
    CHECK(c.integral(0.0, 3.0) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(c.integral(0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.integral(1.0, 2.0) == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(c.integral_to_infinity() == doctest::Approx(2.5).epsilon(1e-12));

    // f(rho) = 1/(1+rho) sampled densely: integral_0^x ~ log(1+x) and the
    // scaled-inverse tail continues it exactly.
    auto grid = TransferCurve::log_grid(1e-4, 1e3, 4000);
    std::vector<double> v(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) v[i] = 1.0 / (1.0 + grid[i]);
    auto g = TransferCurve::from_samples(grid, v, TransferCurve::RightRule::ScaledInverse);
    CHECK(g.integral(0.0, 100.0) == doctest::Approx(std::log(101.0)).epsilon(1e-4));
    CHECK(g.integral(0.0, 1e6) == doctest::Approx(std::log(1.0 + 1e6)).epsilon(1e-4));
}

TEST_CASE("transfer curve monotonicity helper") {
    auto c = TransferCurve::from_samples({1.0, 2.0, 3.0}, {0.5, 0.52, 0.4});
    CHECK(!c.non_increasing());
    CHECK(c.non_increasing(0.05));
}

TEST_CASE("min_curve is the pointwise minimum") {
    auto a = TransferCurve::from_function([](double) { return 0.7; });
    auto b = TransferCurve::from_function([](double r) { return 1.0 / r; });
    auto m = min_curve(a, b, {1.0, 2.0, 10.0});
    CHECK(m(1.0) == doctest::Approx(0.7));
    CHECK(m(2.0) == doctest::Approx(0.5));
    CHECK(m(10.0) == doctest::Approx(0.1));
}
