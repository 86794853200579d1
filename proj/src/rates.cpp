#include "ampcap/rates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ampcap/errors.hpp"

namespace ampcap {

namespace {

constexpr double kLn2 = std::numbers::ln2;

SeResult solve_fixed_point_checked(const SystemConfig& cfg, const ScalarMmse& sm,
                                   const char* who) {
    const auto crossing = single_crossing_check(cfg, sm.dense_curve());
    if (!crossing.holds) {
        std::ostringstream msg;
        msg << who << ": single-crossing property violated (" << crossing.crossings.size()
            << " crossings at rho =";
        for (double r : crossing.crossings) msg << " " << r;
        msg << ")";
        throw SingleCrossingError(msg.str(), crossing.crossings);
    }
    return se_fixed_point(cfg, sm.dense_curve());
}

}  // namespace

const char* to_string(RateKind k) {
    switch (k) {
        case RateKind::Capacity: return "capacity";
        case RateKind::Amp: return "amp";
        case RateKind::TurboLmmse: return "turbo_lmmse";
        case RateKind::AmpDec: return "amp_dec";
    }
    return "?";
}

RateKind rate_kind_from_string(const std::string& s) {
    if (s == "capacity") return RateKind::Capacity;
    if (s == "amp") return RateKind::Amp;
    if (s == "turbo_lmmse" || s == "turbo-lmmse") return RateKind::TurboLmmse;
    if (s == "amp_dec" || s == "amp-dec") return RateKind::AmpDec;
    throw SpecError("unknown rate kind '" + s + "'");
}

std::vector<RateKind> all_rate_kinds() {
    return {RateKind::Capacity, RateKind::Amp, RateKind::TurboLmmse, RateKind::AmpDec};
}

// Quadrature error can push a saturated rate a few 1e-5 bits above the
// entropy of the input set; the bound is exact, so apply it.
double clamp_to_entropy(double bits, const ScalarMmse& sm) {
    if (sm.constellation().is_gaussian()) return bits;
    return std::min(bits, sm.constellation().log2_cardinality());
}

double capacity_theorem2(const SystemConfig& cfg, const ScalarMmse& sm) {
    const SeResult se = solve_fixed_point_checked(cfg, sm, "capacity_theorem2");
    const double zeta = std::max(cfg.snr() / se.rho_star - 1.0, 0.0);
    const double nats = (std::log1p(zeta) - zeta / (1.0 + zeta)) / cfg.beta +
                        sm.siso_capacity_nats(se.rho_star);
    return clamp_to_entropy(nats / kLn2, sm);
}

TransferCurve omega_star(const SystemConfig& cfg, const ScalarMmse& sm,
                         int grid_points) {
    const double snr = cfg.snr();
    const auto grid = TransferCurve::log_grid(snr * 1e-6, snr, grid_points);
    const auto& omega = sm.dense_curve();
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        v[i] = std::min(omega(grid[i]), phi_inv(cfg, grid[i]));
    return TransferCurve::from_samples(grid, std::move(v),
                                       TransferCurve::RightRule::Zero,
                                       "omega_star(" + sm.constellation().name() + ")");
}

double area_capacity_prop1(const SystemConfig& cfg, const ScalarMmse& sm) {
    const SeResult se = solve_fixed_point_checked(cfg, sm, "area_capacity_prop1");
    const double x = se.rho_star / cfg.snr();
    const double nats =
        (x - std::log(x) - 1.0) / cfg.beta + sm.siso_capacity_nats(se.rho_star);
    return nats / kLn2;
}

double rate_turbo_lmmse(const SystemConfig& cfg, const ScalarMmse& sm) {
    if (sm.constellation().is_gaussian()) {
        // Extrinsic LMMSE detection is capacity achieving for Gaussian inputs.
        return capacity_theorem2(cfg, sm);
    }
    const auto& omega = sm.dense_curve();
    const auto& opt = sm.options();
    const auto grid = TransferCurve::log_grid(opt.rho_min, opt.rho_max, opt.dense_points);
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = omega(grid[i]);
        f[i] = omega(grid[i] + phi(cfg, w));
    }
    const auto integrand = TransferCurve::from_samples(
        grid, std::move(f), TransferCurve::RightRule::ScaledInverse);
    const double nats =
        std::log((double)sm.constellation().size()) - integrand.integral_to_infinity();
    return std::max(nats, 0.0) / kLn2;
}

double rate_amp_dec(const SystemConfig& cfg, const ScalarMmse& sm) {
    const SeResult se = solve_fixed_point_checked(cfg, sm, "rate_amp_dec");
    return sm.siso_capacity_bits(se.rho_star);
}

double capacity_theorem2(const SystemConfig& cfg, const Constellation& c) {
    return capacity_theorem2(cfg, ScalarMmse(c));
}
TransferCurve omega_star(const SystemConfig& cfg, const Constellation& c, int grid_points) {
    return omega_star(cfg, ScalarMmse(c), grid_points);
}
double area_capacity_prop1(const SystemConfig& cfg, const Constellation& c) {
    return area_capacity_prop1(cfg, ScalarMmse(c));
}
double rate_turbo_lmmse(const SystemConfig& cfg, const Constellation& c) {
    return rate_turbo_lmmse(cfg, ScalarMmse(c));
}
double rate_amp_dec(const SystemConfig& cfg, const Constellation& c) {
    return rate_amp_dec(cfg, ScalarMmse(c));
}

std::vector<RatePoint> rate_sweep(double beta, const Constellation& c,
                                  const std::vector<double>& snr_db,
                                  const std::vector<RateKind>& kinds,
                                  const ScalarMmse::Options& opt) {
    ScalarMmse sm(c, opt);
    std::vector<RatePoint> out;
    out.reserve(snr_db.size() * kinds.size());
    for (double db : snr_db) {
        const SystemConfig cfg = SystemConfig::from_snr_db(beta, db);
        for (RateKind k : kinds) {
            RatePoint p;
            p.snr_db = db;
            p.kind = k;
            try {
                switch (k) {
                    case RateKind::Capacity: p.rate_bits = capacity_theorem2(cfg, sm); break;
                    case RateKind::Amp: p.rate_bits = area_capacity_prop1(cfg, sm); break;
                    case RateKind::TurboLmmse:
                        p.rate_bits = rate_turbo_lmmse(cfg, sm);
                        if (c.is_gaussian()) p.note = "equals capacity for gaussian";
                        break;
                    case RateKind::AmpDec: p.rate_bits = rate_amp_dec(cfg, sm); break;
                }
            } catch (const SingleCrossingError& e) {
                p.ok = false;
                p.rate_bits = std::nan("");
                p.note = e.what();
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace ampcap
