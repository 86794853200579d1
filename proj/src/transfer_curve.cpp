#include "ampcap/transfer_curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ampcap/errors.hpp"

namespace ampcap {

TransferCurve TransferCurve::from_function(std::function<double(double)> fn,
                                           std::string label) {
    TransferCurve c;
    c.fn_ = std::move(fn);
    c.label_ = std::move(label);
    return c;
}

TransferCurve TransferCurve::from_samples(std::vector<double> rho_grid,
                                          std::vector<double> v_values,
                                          RightRule right, std::string label) {
    return from_samples_with_stderr(std::move(rho_grid), std::move(v_values), {},
                                    right, std::move(label));
}

TransferCurve TransferCurve::from_samples_with_stderr(
    std::vector<double> rho_grid, std::vector<double> v_values,
    std::vector<double> std_errors, RightRule right, std::string label) {
    if (rho_grid.empty() || rho_grid.size() != v_values.size())
        throw SpecError("transfer curve: empty grid or grid/value size mismatch");
    if (!std_errors.empty() && std_errors.size() != rho_grid.size())
        throw SpecError("transfer curve: stderr size mismatch");
    for (std::size_t i = 0; i + 1 < rho_grid.size(); ++i)
        if (!(rho_grid[i] < rho_grid[i + 1]))
            throw SpecError("transfer curve: rho grid must be strictly increasing");
    for (double& v : v_values) {
        if (!std::isfinite(v)) throw SpecError("transfer curve: non-finite value");
        v = std::clamp(v, 0.0, 1.0);  // absorb Monte Carlo jitter at the ends
    }
    TransferCurve c;
    c.grid_ = std::move(rho_grid);
    c.values_ = std::move(v_values);
    c.stderrs_ = std::move(std_errors);
    c.right_ = right;
    c.label_ = std::move(label);
    c.build_cumulative();
    return c;
}

std::vector<double> TransferCurve::log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw SpecError("log_grid: need 0 < lo < hi and points >= 2");
    std::vector<double> g(points);
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = lo * std::exp(step * i);
    g.front() = lo;
    g.back() = hi;
    return g;
}

void TransferCurve::build_cumulative() {
    cumint_.assign(grid_.size(), 0.0);
    for (std::size_t i = 1; i < grid_.size(); ++i) {
        cumint_[i] = cumint_[i - 1] +
                     0.5 * (values_[i] + values_[i - 1]) * (grid_[i] - grid_[i - 1]);
    }
}

double TransferCurve::eval_sampled(double rho) const {
    if (rho <= grid_.front()) return values_.front();
    if (rho >= grid_.back()) {
        switch (right_) {
            case RightRule::Zero: return rho == grid_.back() ? values_.back() : 0.0;
            case RightRule::HoldLast: return values_.back();
            case RightRule::ScaledInverse:
                return values_.back() * (1.0 + grid_.back()) / (1.0 + rho);
        }
    }
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), rho);
    const std::size_t i = (std::size_t)(it - grid_.begin());
    const double t = (rho - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
    return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

double TransferCurve::operator()(double rho) const {
    if (fn_) return fn_(rho);
    if (grid_.empty()) throw SpecError("transfer curve: empty");
    return eval_sampled(rho);
}

TransferCurve TransferCurve::sampled(const std::vector<double>& grid) const {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = (*this)(grid[i]);
    return from_samples(grid, std::move(v), right_, label_);
}

double TransferCurve::integral(double a, double b) const {
    if (fn_) throw SpecError("transfer curve: integral requires a sampled curve");
    if (!(b >= a && a >= 0.0)) throw SpecError("transfer curve: bad integral bounds");
    // F(x) = integral over [0, x]; left of the grid the first value is held.
    auto F = [&](double x) -> double {
        if (x <= grid_.front()) return x * values_.front();
        const double held = grid_.front() * values_.front();
        if (x >= grid_.back()) {
            double tail = 0.0;
            const double v = values_.back(), r = grid_.back();
            switch (right_) {
                case RightRule::Zero: break;
                case RightRule::HoldLast: tail = v * (x - r); break;
                case RightRule::ScaledInverse:
                    tail = v * (1.0 + r) * std::log((1.0 + x) / (1.0 + r));
                    break;
            }
            return held + cumint_.back() + tail;
        }
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
        const std::size_t i = (std::size_t)(it - grid_.begin());
        const double vx = eval_sampled(x);
        return held + cumint_[i - 1] + 0.5 * (values_[i - 1] + vx) * (x - grid_[i - 1]);
    };
    return F(b) - F(a);
}

double TransferCurve::integral_to_infinity(double tail_horizon) const {
    if (fn_) throw SpecError("transfer curve: integral requires a sampled curve");
    if (right_ == RightRule::HoldLast)
        throw SpecError("transfer curve: infinite integral undefined under HoldLast");
    double total = grid_.front() * values_.front() + cumint_.back();
    if (right_ == RightRule::ScaledInverse) {
        const double v = values_.back(), r = grid_.back();
        if (tail_horizon > r)
            total += v * (1.0 + r) * std::log((1.0 + tail_horizon) / (1.0 + r));
    }
    return total;
}

bool TransferCurve::non_increasing(double slack) const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] > values_[i - 1] + slack) return false;
    return true;
}

TransferCurve min_curve(const TransferCurve& a, const TransferCurve& b,
                        const std::vector<double>& grid,
                        TransferCurve::RightRule right, std::string label) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = std::min(a(grid[i]), b(grid[i]));
    return TransferCurve::from_samples(grid, std::move(v), right, std::move(label));
}

}  // namespace ampcap
