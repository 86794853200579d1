#include "ampcap/state_evolution.hpp"

#include <algorithm>
#include <cmath>

namespace ampcap {

double phi(const SystemConfig& cfg, double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::domain_error("phi: v must be finite and >= 0");
    return 1.0 / (cfg.beta * v + cfg.sigma2);
}

double phi_inv(const SystemConfig& cfg, double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::domain_error("phi_inv: rho must be finite and > 0");
    if (rho > cfg.snr() * (1.0 + 1e-12))
        throw std::domain_error("phi_inv: rho exceeds snr, inverse leaves [0, snr]");
    return std::max((1.0 / rho - cfg.sigma2) / cfg.beta, 0.0);
}

SeResult se_fixed_point(const SystemConfig& cfg, const TransferCurve& omega,
                        const SeOptions& opt) {
    SeResult res;
    double v = 1.0;
    for (int t = 0; t < opt.max_iterations; ++t) {
        const double rho = phi(cfg, v);
        const double v_next = std::clamp(omega(rho), 0.0, 1.0);
        res.trace.push_back({rho, v_next});
        res.iterations = t + 1;
        if (std::abs(v_next - v) < opt.step_tol) {
            // Residual measured at the returned point rho* = phi(v*). The
            // rho-domain form phi(omega(rho*)) = rho* is checked as well:
            // it is equivalent but stays well conditioned as beta -> 0,
            // where evaluating phi_inv cancels catastrophically.
            const double rho_star = phi(cfg, v_next);
            const double w = omega(rho_star);
            const double v_residual = std::abs(w - phi_inv(cfg, rho_star));
            const double rho_residual = std::abs(phi(cfg, w) - rho_star) / rho_star;
            if (v_residual < opt.residual_tol || rho_residual < opt.residual_tol) {
                res.rho_star = rho_star;
                res.v_star = v_next;
                return res;
            }
        }
        v = v_next;
    }
    throw IterationLimitError("se_fixed_point: no convergence within iteration cap",
                              std::move(res.trace));
}

CrossingReport single_crossing_check(const SystemConfig& cfg,
                                     const TransferCurve& omega, int grid_points) {
    CrossingReport report;
    const double snr = cfg.snr();
    // All crossings satisfy phi_inv(rho) <= 1, i.e. rho >= phi(1); scan a
    // hair below that to anchor the negative side of g.
    const double lo = std::min(phi(cfg, 1.0) * 0.99, snr * 0.5);
    const auto grid = TransferCurve::log_grid(lo, snr, grid_points);

    auto g = [&](double rho) { return omega(rho) - phi_inv(cfg, rho); };

    std::vector<double> gv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) gv[i] = g(grid[i]);

    int prev_sign = 0;
    double prev_rho = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const int sign = gv[i] > 0.0 ? 1 : (gv[i] < 0.0 ? -1 : 0);
        if (sign == 0) continue;
        if (prev_sign != 0 && sign != prev_sign) {
            double a = prev_rho, b = grid[i];
            double ga = g(a);
            while ((b - a) > 1e-10 * b) {
                const double mid = 0.5 * (a + b);
                const double gm = g(mid);
                if ((gm > 0.0) == (ga > 0.0)) {
                    a = mid;
                    ga = gm;
                } else {
                    b = mid;
                }
            }
            report.crossings.push_back(0.5 * (a + b));
        }
        prev_sign = sign;
        prev_rho = grid[i];
    }
    report.holds = report.crossings.size() == 1;
    return report;
}

}  // namespace ampcap
