#include "ampcap/scalar_mmse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ampcap/quadrature.hpp"
#include "ampcap/rng.hpp"

namespace ampcap {

namespace {

void require_valid_rho(double rho, const char* who) {
    if (!std::isfinite(rho) || rho < 0.0)
        throw std::domain_error(std::string(who) + ": rho must be finite and >= 0");
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Rotations (and reflections) that map the weighted point set onto itself.
// Contributions to the MMSE are equal within an orbit because the noise is
// circular, so only one representative per orbit needs quadrature.
void find_orbits(const Constellation& c, std::vector<int>& reps,
                 std::vector<double>& mass) {
    const auto& pts = c.points();
    const auto& pri = c.priors();
    const int n = (int)pts.size();
    UnionFind uf(n);

    auto apply_if_symmetry = [&](std::complex<double> phase, bool conjugate) {
        std::vector<int> image(n, -1);
        for (int i = 0; i < n; ++i) {
            const std::complex<double> t =
                phase * (conjugate ? std::conj(pts[i]) : pts[i]);
            for (int j = 0; j < n; ++j) {
                if (std::abs(t - pts[j]) < 1e-9 && std::abs(pri[i] - pri[j]) < 1e-12) {
                    image[i] = j;
                    break;
                }
            }
            if (image[i] < 0) return;
        }
        for (int i = 0; i < n; ++i) uf.unite(i, image[i]);
    };

    const double r0 = std::abs(pts[0]);
    for (int j = 0; j < n; ++j) {
        if (std::abs(std::abs(pts[j]) - r0) > 1e-9) continue;
        const std::complex<double> phase =
            (r0 > 0.0) ? pts[j] / pts[0] : std::complex<double>(1.0, 0.0);
        apply_if_symmetry(phase, false);
        apply_if_symmetry(phase, true);
    }

    reps.clear();
    mass.clear();
    std::vector<int> rep_of_root(n, -1);
    for (int i = 0; i < n; ++i) {
        const int r = uf.find(i);
        if (rep_of_root[r] < 0) {
            rep_of_root[r] = (int)reps.size();
            reps.push_back(i);
            mass.push_back(0.0);
        }
        mass[rep_of_root[r]] += pri[i];
    }
}

}  // namespace

ScalarMmse::ScalarMmse(Constellation c, Options opt) : c_(std::move(c)), opt_(opt) {
    if (!c_.is_gaussian()) {
        log_priors_.resize(c_.size());
        for (int i = 0; i < c_.size(); ++i) log_priors_[i] = std::log(c_.priors()[i]);
        find_orbits(c_, orbit_reps_, orbit_mass_);
    }
}

Posterior ScalarMmse::posterior_from_logw(const std::complex<double>* pts, int n,
                                          const double* logw) const {
    double maxw = logw[0];
    for (int j = 1; j < n; ++j) maxw = std::max(maxw, logw[j]);
    double z = 0.0;
    std::complex<double> mean{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        const double w = std::exp(logw[j] - maxw);
        z += w;
        mean += w * pts[j];
    }
    mean /= z;
    double var = 0.0;
    for (int j = 0; j < n; ++j) {
        const double w = std::exp(logw[j] - maxw);
        var += w * std::norm(pts[j] - mean);
    }
    var /= z;
    return {mean, std::max(var, 0.0)};
}

double ScalarMmse::omega_discrete_quadrature(double rho) const {
    const auto& gh = gauss_hermite(opt_.gh_order);
    const int q = (int)gh.nodes.size();
    const int n = c_.size();
    const auto& pts = c_.points();
    const double sqrt_rho = std::sqrt(rho);

    std::vector<std::complex<double>> scaled(n);
    for (int j = 0; j < n; ++j) scaled[j] = sqrt_rho * pts[j];

    std::vector<double> logw(n);
    double acc = 0.0;
    for (std::size_t oi = 0; oi < orbit_reps_.size(); ++oi) {
        const int i = orbit_reps_[oi];
        double orbit_acc = 0.0;
        for (int k = 0; k < q; ++k) {
            for (int l = 0; l < q; ++l) {
                const std::complex<double> y =
                    scaled[i] + std::complex<double>(gh.nodes[k], gh.nodes[l]);
                for (int j = 0; j < n; ++j)
                    logw[j] = log_priors_[j] - std::norm(y - scaled[j]);
                const Posterior p = posterior_from_logw(pts.data(), n, logw.data());
                orbit_acc += gh.weights[k] * gh.weights[l] * std::norm(pts[i] - p.mean);
            }
        }
        acc += orbit_mass_[oi] * orbit_acc;
    }
    return std::clamp(acc / std::numbers::pi, 0.0, 1.0);
}

double ScalarMmse::omega_discrete_mc(double rho, long samples) const {
    GaussianSampler rng(opt_.mc_seed);
    const int n = c_.size();
    const auto& pts = c_.points();
    const auto& pri = c_.priors();
    const double sqrt_rho = std::sqrt(rho);
    std::vector<double> cdf(n);
    double c = 0.0;
    for (int j = 0; j < n; ++j) cdf[j] = (c += pri[j]);

    std::vector<std::complex<double>> scaled(n);
    for (int j = 0; j < n; ++j) scaled[j] = sqrt_rho * pts[j];
    std::vector<double> logw(n);

    double acc = 0.0;
    for (long t = 0; t < samples; ++t) {
        const double u = rng.uniform();
        const int i = (int)(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        const std::complex<double> y = scaled[i] + rng.complex_normal();
        for (int j = 0; j < n; ++j)
            logw[j] = log_priors_[j] - std::norm(y - scaled[j]);
        const Posterior p = posterior_from_logw(pts.data(), n, logw.data());
        acc += std::norm(pts[i] - p.mean);
    }
    return std::clamp(acc / (double)samples, 0.0, 1.0);
}

double ScalarMmse::omega(double rho) const {
    require_valid_rho(rho, "omega_s");
    if (c_.is_gaussian()) return 1.0 / (1.0 + rho);
    if (rho == 0.0) return c_.prior_variance();
    if (c_.size() > opt_.mc_threshold) return omega_discrete_mc(rho, opt_.mc_samples);
    return omega_discrete_quadrature(rho);
}

Posterior ScalarMmse::eta(std::complex<double> r, double rho) const {
    require_valid_rho(rho, "eta");
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw std::domain_error("eta: observation must be finite");
    if (c_.is_gaussian()) {
        const double g = rho / (1.0 + rho);
        return {r * g, 1.0 / (1.0 + rho)};
    }
    if (rho == 0.0) return {c_.prior_mean(), c_.prior_variance()};
    const int n = c_.size();
    const auto& pts = c_.points();
    std::vector<double> logw(n);
    for (int j = 0; j < n; ++j)
        logw[j] = log_priors_[j] - rho * std::norm(r - pts[j]);
    return posterior_from_logw(pts.data(), n, logw.data());
}

const TransferCurve& ScalarMmse::dense_curve() const {
    std::call_once(curve_once_, [this] {
        if (c_.is_gaussian()) {
            curve_ = TransferCurve::from_function(
                [](double rho) { return 1.0 / (1.0 + rho); }, "omega_s(gaussian)");
            return;
        }
        int points = opt_.dense_points;
        if (c_.size() > opt_.mc_threshold) points = std::min(points, 256);
        std::vector<double> grid = TransferCurve::log_grid(opt_.rho_min, opt_.rho_max, points);
        grid.insert(grid.begin(), 0.0);
        std::vector<double> v(grid.size());
        v[0] = c_.prior_variance();
        const long mc_samples = std::min<long>(opt_.mc_samples, 200000);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            v[i] = (c_.size() > opt_.mc_threshold)
                       ? omega_discrete_mc(grid[i], mc_samples)
                       : omega_discrete_quadrature(grid[i]);
        }
        curve_ = TransferCurve::from_samples(std::move(grid), std::move(v),
                                             TransferCurve::RightRule::ScaledInverse,
                                             "omega_s(" + c_.name() + ")");
    });
    return curve_;
}

double ScalarMmse::siso_capacity_nats(double rho_star) const {
    require_valid_rho(rho_star, "siso_capacity");
    if (c_.is_gaussian()) return std::log1p(rho_star);
    if (rho_star == 0.0) return 0.0;
    return dense_curve().integral(0.0, rho_star);
}

double ScalarMmse::siso_capacity_bits(double rho_star) const {
    return siso_capacity_nats(rho_star) / std::numbers::ln2;
}

double omega_s(const Constellation& c, double rho) {
    return ScalarMmse(c).omega(rho);
}

Posterior eta(const Constellation& c, std::complex<double> r, double rho) {
    return ScalarMmse(c).eta(r, rho);
}

double siso_capacity(const Constellation& c, double rho_star) {
    return ScalarMmse(c).siso_capacity_bits(rho_star);
}

}  // namespace ampcap
