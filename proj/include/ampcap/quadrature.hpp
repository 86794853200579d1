#pragma once

#include <vector>

namespace ampcap {

/// Nodes and weights for physicists' Gauss-Hermite quadrature:
///   integral e^{-x^2} f(x) dx  ~=  sum_i w_i f(x_i).
struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order (number of nodes). Cached; thread-safe.
const GaussHermite& gauss_hermite(int order);

}  // namespace ampcap
