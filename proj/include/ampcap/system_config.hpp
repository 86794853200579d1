#pragma once

#include <cmath>

#include "ampcap/errors.hpp"

namespace ampcap {

/// Channel load and noise level of the linear system y = A x + n with
/// A of size M x N, beta = N/M and snr = 1/sigma2. N, M are optional and
/// only used by the vector-system samplers.
struct SystemConfig {
    double beta = 1.0;
    double sigma2 = 1.0;
    int n = 0;
    int m = 0;

    double snr() const { return 1.0 / sigma2; }
    double snr_db() const { return -10.0 * std::log10(sigma2); }

    static SystemConfig from_snr_db(double beta, double snr_db, int n = 0, int m = 0) {
        SystemConfig cfg{beta, std::pow(10.0, -snr_db / 10.0), n, m};
        cfg.validate();
        return cfg;
    }

    void validate() const {
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw SpecError("system config: beta must be positive and finite");
        if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
            throw SpecError("system config: sigma2 must be positive and finite");
        if (n < 0 || m < 0) throw SpecError("system config: negative dimensions");
        if (n > 0 && m > 0) {
            const double ratio = (double)n / (double)m;
            if (std::abs(ratio - beta) > 0.5 / (double)m + 1e-9)
                throw SpecError("system config: beta does not match n/m");
        }
    }
};

}  // namespace ampcap
