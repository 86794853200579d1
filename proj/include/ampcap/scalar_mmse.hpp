#pragma once
#include <utility>

#include <complex>
#include <cstdint>
#include <mutex>
#include <vector>

#include "ampcap/constellation.hpp"
#include "ampcap/transfer_curve.hpp"

namespace ampcap {

struct Posterior {
    std::complex<double> mean;
    double var;
};

/// Scalar AWGN quantities for one input distribution: the MMSE function
/// omega(rho) for y = sqrt(rho) x + z with z ~ CN(0,1), the conditional-mean
/// denoiser for r = x + CN(0, 1/rho), and the capacity integral under omega.
///
/// Discrete sets are evaluated by tensor-grid Gauss-Hermite quadrature over
/// the complex noise; sets larger than `mc_threshold` points fall back to
/// Monte Carlo. Gaussian signaling uses the closed forms 1/(1+rho) and
/// log(1+rho).
///
/// All information quantities are in nats internally; *_bits converts.
class ScalarMmse {
public:
    struct Options {
        int gh_order = 40;
        int mc_threshold = 64;
        long mc_samples = 1000000;
        std::uint64_t mc_seed = 0xA31FC0DEULL;
        int dense_points = 2000;
        double rho_min = 1e-4;
        double rho_max = 1e4;
    };

    explicit ScalarMmse(Constellation c) : ScalarMmse(std::move(c), Options{}) {}
    ScalarMmse(Constellation c, Options opt);

    const Constellation& constellation() const { return c_; }
    const Options& options() const { return opt_; }

    /// mmse(x | sqrt(rho) x + z). In [0, 1], non-increasing in rho.
    double omega(double rho) const;

    /// Posterior mean and variance of x given r = x + CN(0, 1/rho).
    Posterior eta(std::complex<double> r, double rho) const;

    /// integral_0^rho_star omega(rho) d rho. Above the internal grid cap the
    /// tail is the analytic 1/(1+rho)-shaped bound anchored at the cap.
    double siso_capacity_nats(double rho_star) const;
    double siso_capacity_bits(double rho_star) const;

    /// omega sampled once on a dense log grid (plus the exact rho = 0 knot);
    /// cached. Sweeps and fixed-point solvers interpolate on this curve.
    const TransferCurve& dense_curve() const;

private:
    double omega_discrete_quadrature(double rho) const;
    double omega_discrete_mc(double rho, long samples) const;
    Posterior posterior_from_logw(const std::complex<double>* pts, int n,
                                  const double* logw) const;

    Constellation c_;
    Options opt_;
    std::vector<int> orbit_reps_;
    std::vector<double> orbit_mass_;
    std::vector<double> log_priors_;
    mutable std::once_flag curve_once_;
    mutable TransferCurve curve_;
};

// Convenience wrappers matching the one-shot call shape. They construct a
// ScalarMmse per call; keep an instance around for sweeps.
double omega_s(const Constellation& c, double rho);
Posterior eta(const Constellation& c, std::complex<double> r, double rho);
double siso_capacity(const Constellation& c, double rho_star);  // bits

}  // namespace ampcap
