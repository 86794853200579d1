#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ampcap {

/// Monotone (non-increasing) MSE-vs-SINR function v = omega(rho).
///
/// Two flavors share the interface: analytic curves wrap a callable and
/// evaluate exactly; sampled curves interpolate linearly between knots of an
/// increasing rho grid. Left of the grid the first value is held (v(0+));
/// right of the grid the extrapolation rule applies.
class TransferCurve {
public:
    enum class RightRule {
        Zero,           // 0 beyond the last knot
        HoldLast,       // constant beyond the last knot
        ScaledInverse,  // v_last * (1 + rho_last) / (1 + rho): the analytic
                        // 1/(1+rho)-shaped bound anchored at the last knot
    };

    TransferCurve() = default;

    static TransferCurve from_function(std::function<double(double)> fn,
                                       std::string label = {});

    static TransferCurve from_samples(std::vector<double> rho_grid,
                                      std::vector<double> v_values,
                                      RightRule right = RightRule::ScaledInverse,
                                      std::string label = {});

    static TransferCurve from_samples_with_stderr(std::vector<double> rho_grid,
                                                  std::vector<double> v_values,
                                                  std::vector<double> std_errors,
                                                  RightRule right = RightRule::ScaledInverse,
                                                  std::string label = {});

    /// Log-spaced grid helper, inclusive of both endpoints.
    static std::vector<double> log_grid(double lo, double hi, int points);

    double operator()(double rho) const;

    bool analytic() const { return (bool)fn_; }
    bool empty() const { return !fn_ && grid_.empty(); }

    const std::vector<double>& rho_grid() const { return grid_; }
    const std::vector<double>& v_values() const { return values_; }
    const std::vector<double>& std_errors() const { return stderrs_; }
    const std::string& label() const { return label_; }
    RightRule right_rule() const { return right_; }

    /// Materialize (or re-sample) on the given grid. Keeps the right rule.
    TransferCurve sampled(const std::vector<double>& grid) const;

    /// Integral over [a, b] of the interpolant (trapezoid between knots,
    /// exact on partial cells). Sampled curves only.
    double integral(double a, double b) const;

    /// Integral over [0, inf): grid part plus the analytic tail implied by
    /// the right rule, truncated at the given horizon for ScaledInverse.
    double integral_to_infinity(double tail_horizon = 1e8) const;

    /// True if values are non-increasing, allowing `slack` of upward noise.
    bool non_increasing(double slack = 0.0) const;

private:
    std::function<double(double)> fn_;
    std::vector<double> grid_;
    std::vector<double> values_;
    std::vector<double> stderrs_;
    std::vector<double> cumint_;  // cumulative trapezoid from grid_[0]
    RightRule right_ = RightRule::ScaledInverse;
    std::string label_;

    void build_cumulative();
    double eval_sampled(double rho) const;
};

/// Pointwise minimum of two curves, sampled on `grid`.
TransferCurve min_curve(const TransferCurve& a, const TransferCurve& b,
                        const std::vector<double>& grid,
                        TransferCurve::RightRule right = TransferCurve::RightRule::Zero,
                        std::string label = {});

}  // namespace ampcap
