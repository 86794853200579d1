#pragma once

// Independent oracles shared by the unit and acceptance suites. Everything
// here deliberately avoids the library's own evaluation paths.

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "ampcap/rng.hpp"

namespace ampcap::oracles {

/// (1/N) E log det(I_M + snr A A^H) over IID Gaussian A (entries CN(0,1/M)),
/// estimated from `samples` draws. Nats per symbol.
inline double logdet_capacity_mc(int n, int m, double snr, int samples,
                                 std::uint64_t seed) {
    double acc = 0.0;
    for (int s = 0; s < samples; ++s) {
        GaussianSampler rng(derive_seed(seed, s));
        Eigen::MatrixXcd a(m, n);
        const double scale = 1.0 / std::sqrt((double)m);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) a(i, j) = scale * rng.complex_normal();
        Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(m, m) + snr * (a * a.adjoint());
        const Eigen::LLT<Eigen::MatrixXcd> llt(b);
        double logdet = 0.0;
        for (int i = 0; i < m; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i).real());
        acc += logdet / (double)n;
    }
    return acc / samples;
}

}  // namespace ampcap::oracles
