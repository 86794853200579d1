#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace ampcap {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic per-stream seed from a master seed. Used so that trials can
/// run in any order (or in parallel) and still reproduce bit-identically.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    return splitmix64(s);
}

/// xoshiro256++ (Blackman & Vigna). Fully specified, fast, and identical on
/// every platform, unlike std::normal_distribution's sequence.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed = 1) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }

    result_type operator()() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

/// Uniform, Gaussian and circular complex Gaussian variates on top of
/// xoshiro256++. Box-Muller with a cached spare.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed = 1) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    /// Uniform in (0, 1].
    double uniform_pos() {
        return (double)((eng_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform in [0, 1).
    double uniform() { return (double)(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Lemire-style rejection-free enough for simulation use.
        return (std::uint64_t)(uniform() * (double)n) % n;
    }

    /// Standard real normal N(0, 1).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        spare_ = mag * std::sin(ang);
        have_spare_ = true;
        return mag * std::cos(ang);
    }

    /// Circular complex normal CN(0, 1): real/imag parts N(0, 1/2).
    std::complex<double> complex_normal() {
        constexpr double inv_sqrt2 = 0.70710678118654752440;
        const double a = normal();
        const double b = normal();
        return {a * inv_sqrt2, b * inv_sqrt2};
    }

private:
    Xoshiro256pp eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ampcap
