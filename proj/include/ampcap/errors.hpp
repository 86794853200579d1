#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ampcap {

/// Invalid experiment or CLI input. The CLI maps this to exit code 2.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Capacity formulas require exactly one crossing of omega and phi^{-1}.
/// Carries the crossing locations found on the scan grid.
class SingleCrossingError : public std::domain_error {
public:
    SingleCrossingError(const std::string& msg, std::vector<double> crossings)
        : std::domain_error(msg), crossings_(std::move(crossings)) {}

    const std::vector<double>& crossings() const noexcept { return crossings_; }

private:
    std::vector<double> crossings_;
};

}  // namespace ampcap
