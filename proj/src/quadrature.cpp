#include "ampcap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ampcap {

namespace {

// Newton iteration on the orthonormal Hermite recurrence, largest root first.
GaussHermite compute(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    GaussHermite gh;
    gh.nodes.assign(n, 0.0);
    gh.weights.assign(n, 0.0);

    const double pim4 = 0.751125544464942482;  // pi^{-1/4}
    const int half = (n + 1) / 2;
    double z = 0.0, pp = 0.0;

    for (int i = 0; i < half; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow((double)n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * gh.nodes[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * gh.nodes[1];
        } else {
            z = 2.0 * z - gh.nodes[i - 2];
        }
        for (int its = 0; its < 100; ++its) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt((double)j / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        gh.nodes[i] = z;
        gh.nodes[n - 1 - i] = -z;
        gh.weights[i] = 2.0 / (pp * pp);
        gh.weights[n - 1 - i] = gh.weights[i];
    }
    if (n % 2 == 1) gh.nodes[half - 1] = 0.0;
    return gh;
}

}  // namespace

const GaussHermite& gauss_hermite(int order) {
    static std::mutex mu;
    static std::map<int, GaussHermite> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute(order)).first;
    return it->second;
}

}  // namespace ampcap
