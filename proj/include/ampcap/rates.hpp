#pragma once

#include <string>
#include <vector>

#include "ampcap/scalar_mmse.hpp"
#include "ampcap/state_evolution.hpp"
#include "ampcap/system_config.hpp"
#include "ampcap/transfer_curve.hpp"

namespace ampcap {

enum class RateKind { Capacity, Amp, TurboLmmse, AmpDec };

const char* to_string(RateKind k);
RateKind rate_kind_from_string(const std::string& s);
std::vector<RateKind> all_rate_kinds();

struct RatePoint {
    double snr_db = 0.0;
    RateKind kind = RateKind::Capacity;
    double rate_bits = 0.0;
    bool ok = true;
    std::string note;
};

/// Constrained capacity via the zeta* fixed point, bits/symbol. zeta* is
/// derived from the state-evolution fixed point as zeta* = snr/rho* - 1.
/// Throws SingleCrossingError when omega and phi_inv cross more than once.
double capacity_theorem2(const SystemConfig& cfg, const ScalarMmse& sm);
double capacity_theorem2(const SystemConfig& cfg, const Constellation& c);

/// Matched decoder target min{omega_s(rho), phi_inv(rho)} sampled on (0, snr].
TransferCurve omega_star(const SystemConfig& cfg, const ScalarMmse& sm,
                         int grid_points = 1024);
TransferCurve omega_star(const SystemConfig& cfg, const Constellation& c,
                         int grid_points = 1024);

/// Same capacity as the area covered by omega_star:
/// beta^{-1}[rho*/snr - log(rho*/snr) - 1] + integral_0^{rho*} omega_s.
/// Agrees with capacity_theorem2 to well under 1e-6 bits.
double area_capacity_prop1(const SystemConfig& cfg, const ScalarMmse& sm);
double area_capacity_prop1(const SystemConfig& cfg, const Constellation& c);

/// log|S| - integral_0^inf omega_s(rho + phi(omega_s(rho))) d rho, in bits.
/// Gaussian signaling achieves capacity with this receiver, so the capacity
/// value is returned for it.
double rate_turbo_lmmse(const SystemConfig& cfg, const ScalarMmse& sm);
double rate_turbo_lmmse(const SystemConfig& cfg, const Constellation& c);

/// Cascade rate integral_0^{rho*} omega_s, bits, with rho* the un-coded
/// state-evolution fixed point.
double rate_amp_dec(const SystemConfig& cfg, const ScalarMmse& sm);
double rate_amp_dec(const SystemConfig& cfg, const Constellation& c);

/// Evaluate the requested kinds at each SNR point, in input order. Errors
/// (e.g. single-crossing violations) are reported as flagged rows.
std::vector<RatePoint> rate_sweep(double beta, const Constellation& c,
                                  const std::vector<double>& snr_db,
                                  const std::vector<RateKind>& kinds,
                                  const ScalarMmse::Options& opt = {});

}  // namespace ampcap
