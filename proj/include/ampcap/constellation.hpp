#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ampcap {

/// Discrete complex signal set with priors, or the Gaussian-signaling marker.
/// Discrete sets must have strictly positive priors summing to 1 and unit
/// average energy, both to 1e-12, so that snr = 1/sigma^2 is per-symbol SNR.
///
/// Each point carries an integer bit label; presets use Gray labeling. Bit b
/// of the label is coded bit b of the symbol when mapping codewords.
class Constellation {
public:
    static Constellation bpsk();
    static Constellation qpsk();
    static Constellation psk8();
    static Constellation qam16();
    static Constellation gaussian();

    /// Lookup by preset name: bpsk, qpsk, 8psk, 16qam, gaussian.
    static Constellation by_name(const std::string& name);

    /// Custom set from CSV rows `re,im,prior` (header line optional).
    static Constellation from_csv(const std::string& path);

    static Constellation custom(std::string label,
                                std::vector<std::complex<double>> points,
                                std::vector<double> priors);

    bool is_gaussian() const { return gaussian_; }
    int size() const { return (int)points_.size(); }

    /// log2 of the set size; requires a power-of-two discrete set.
    int bits_per_symbol() const;

    /// log2|S| as a real number (any discrete size); used for rate bounds.
    double log2_cardinality() const;

    const std::vector<std::complex<double>>& points() const { return points_; }
    const std::vector<double>& priors() const { return priors_; }
    std::uint32_t label(int i) const { return labels_[i]; }
    std::complex<double> point_for_bits(std::uint32_t bits) const;

    std::complex<double> prior_mean() const;
    /// Variance of the prior, i.e. the MMSE with no observation.
    double prior_variance() const;

    const std::string& name() const { return name_; }

private:
    Constellation() = default;
    void validate() const;

    std::string name_;
    bool gaussian_ = false;
    std::vector<std::complex<double>> points_;
    std::vector<double> priors_;
    std::vector<std::uint32_t> labels_;
    std::vector<int> point_of_label_;
};

}  // namespace ampcap
