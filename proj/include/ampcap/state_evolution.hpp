#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ampcap/system_config.hpp"
#include "ampcap/transfer_curve.hpp"

namespace ampcap {

/// One state-evolution step: rho = phi(v) is the SINR after the linear
/// detector, v = omega(rho) the MSE after the denoiser.
struct SePoint {
    double rho;
    double v;
};

class IterationLimitError : public std::runtime_error {
public:
    IterationLimitError(const std::string& msg, std::vector<SePoint> trace)
        : std::runtime_error(msg), trace_(std::move(trace)) {}
    const std::vector<SePoint>& trace() const noexcept { return trace_; }

private:
    std::vector<SePoint> trace_;
};

/// rho = phi(v) = 1 / (beta v + sigma^2). Strictly decreasing; phi(0) = snr.
double phi(const SystemConfig& cfg, double v);

/// v = phi^{-1}(rho) = (1/rho - sigma^2) / beta for 0 < rho <= snr.
/// Throws std::domain_error outside that range.
double phi_inv(const SystemConfig& cfg, double rho);

struct SeOptions {
    double step_tol = 1e-12;      // stop on |v_{t+1} - v_t|
    double residual_tol = 1e-10;  // also require |omega(rho*) - phi_inv(rho*)|
    int max_iterations = 10000;
};

struct SeResult {
    double rho_star = 0.0;
    double v_star = 0.0;
    std::vector<SePoint> trace;  // trace[t] = (rho^t, v^{t+1})
    int iterations = 0;
};

/// Iterate rho^t = phi(v^t), v^{t+1} = omega(rho^t) from v^0 = 1 until the
/// step and residual tolerances hold. Throws IterationLimitError (carrying
/// the trace) if the cap is reached first.
SeResult se_fixed_point(const SystemConfig& cfg, const TransferCurve& omega,
                        const SeOptions& opt = {});

struct CrossingReport {
    bool holds = false;              // exactly one crossing
    std::vector<double> crossings;   // refined locations, increasing
};

/// Count sign changes of g(rho) = omega(rho) - phi_inv(rho) over (0, snr],
/// refining each bracket by bisection to 1e-10 relative width.
CrossingReport single_crossing_check(const SystemConfig& cfg,
                                     const TransferCurve& omega,
                                     int grid_points = 4000);

}  // namespace ampcap
