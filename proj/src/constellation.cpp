#include "ampcap/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ampcap/errors.hpp"

namespace ampcap {

namespace {

std::uint32_t inverse_gray(std::uint32_t g) {
    std::uint32_t k = 0;
    for (; g; g >>= 1) k ^= g;
    return k;
}

}  // namespace

void Constellation::validate() const {
    if (gaussian_) return;
    if (points_.empty()) throw SpecError("constellation: empty point set");
    if (points_.size() != priors_.size())
        throw SpecError("constellation: points/priors size mismatch");
    double psum = 0.0, energy = 0.0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!(priors_[i] > 0.0))
            throw SpecError("constellation: priors must be strictly positive");
        if (!std::isfinite(points_[i].real()) || !std::isfinite(points_[i].imag()))
            throw SpecError("constellation: non-finite point");
        psum += priors_[i];
        energy += priors_[i] * std::norm(points_[i]);
    }
    if (std::abs(psum - 1.0) > 1e-12)
        throw SpecError("constellation: priors must sum to 1 (got " +
                        std::to_string(psum) + ")");
    if (std::abs(energy - 1.0) > 1e-12)
        throw SpecError("constellation: average energy must be 1 (got " +
                        std::to_string(energy) + ")");
}

Constellation Constellation::custom(std::string label,
                                    std::vector<std::complex<double>> points,
                                    std::vector<double> priors) {
    Constellation c;
    c.name_ = std::move(label);
    c.points_ = std::move(points);
    c.priors_ = std::move(priors);
    c.labels_.resize(c.points_.size());
    for (std::size_t i = 0; i < c.labels_.size(); ++i) c.labels_[i] = (std::uint32_t)i;
    c.point_of_label_.assign(c.points_.size(), 0);
    for (std::size_t i = 0; i < c.labels_.size(); ++i) c.point_of_label_[c.labels_[i]] = (int)i;
    c.validate();
    return c;
}

Constellation Constellation::gaussian() {
    Constellation c;
    c.name_ = "gaussian";
    c.gaussian_ = true;
    return c;
}

Constellation Constellation::bpsk() {
    auto c = custom("bpsk", {{1.0, 0.0}, {-1.0, 0.0}}, {0.5, 0.5});
    return c;
}

Constellation Constellation::qpsk() {
    // Point index == label; bit 0 selects I sign, bit 1 selects Q sign.
    constexpr double a = 0.70710678118654752440;
    std::vector<std::complex<double>> pts(4);
    for (std::uint32_t label = 0; label < 4; ++label) {
        const double re = (label & 1u) ? -a : a;
        const double im = (label & 2u) ? -a : a;
        pts[label] = {re, im};
    }
    auto c = custom("qpsk", std::move(pts), std::vector<double>(4, 0.25));
    return c;
}

Constellation Constellation::psk8() {
    // Gray labels around the circle: position k gets label k ^ (k >> 1),
    // so points are stored at index == label via the inverse Gray map.
    std::vector<std::complex<double>> pts(8);
    for (std::uint32_t label = 0; label < 8; ++label) {
        const std::uint32_t k = inverse_gray(label);
        const double ang = 2.0 * M_PI * k / 8.0;
        pts[label] = {std::cos(ang), std::sin(ang)};
    }
    auto c = custom("8psk", std::move(pts), std::vector<double>(8, 0.125));
    return c;
}

Constellation Constellation::qam16() {
    // Gray per axis over levels {-3,-1,+1,+3}/sqrt(10); bits (0,1) -> I,
    // bits (2,3) -> Q.
    static const double level_of_bits[4] = {-3.0, -1.0, +3.0, +1.0};
    const double scale = 1.0 / std::sqrt(10.0);
    std::vector<std::complex<double>> pts(16);
    for (std::uint32_t label = 0; label < 16; ++label) {
        const double re = level_of_bits[label & 3u] * scale;
        const double im = level_of_bits[(label >> 2) & 3u] * scale;
        pts[label] = {re, im};
    }
    auto c = custom("16qam", std::move(pts), std::vector<double>(16, 1.0 / 16.0));
    return c;
}

Constellation Constellation::by_name(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (n == "bpsk") return bpsk();
    if (n == "qpsk") return qpsk();
    if (n == "8psk" || n == "psk8") return psk8();
    if (n == "16qam" || n == "qam16") return qam16();
    if (n == "gaussian") return gaussian();
    throw SpecError("unknown constellation '" + name +
                    "' (expected bpsk, qpsk, 8psk, 16qam, gaussian, or a CSV path)");
}

Constellation Constellation::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("constellation CSV: cannot open " + path);
    std::vector<std::complex<double>> points;
    std::vector<double> priors;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        double re, im, p;
        if (!(ss >> re >> im >> p)) {
            if (points.empty()) continue;  // header row
            throw SpecError("constellation CSV: bad row '" + line + "'");
        }
        points.push_back({re, im});
        priors.push_back(p);
    }
    auto base = path.find_last_of('/');
    return custom(base == std::string::npos ? path : path.substr(base + 1),
                  std::move(points), std::move(priors));
}

int Constellation::bits_per_symbol() const {
    if (gaussian_) throw SpecError("bits_per_symbol: gaussian signaling has no bit mapping");
    const int n = size();
    if (n <= 0 || (n & (n - 1)) != 0)
        throw SpecError("bits_per_symbol: set size must be a power of two");
    int b = 0;
    while ((1 << b) < n) ++b;
    return b;
}

double Constellation::log2_cardinality() const {
    if (gaussian_) throw SpecError("log2_cardinality: undefined for gaussian signaling");
    return std::log2((double)size());
}

std::complex<double> Constellation::point_for_bits(std::uint32_t bits) const {
    return points_[point_of_label_[bits]];
}

std::complex<double> Constellation::prior_mean() const {
    if (gaussian_) return {0.0, 0.0};
    std::complex<double> m{0.0, 0.0};
    for (std::size_t i = 0; i < points_.size(); ++i) m += priors_[i] * points_[i];
    return m;
}

double Constellation::prior_variance() const {
    if (gaussian_) return 1.0;
    return 1.0 - std::norm(prior_mean());
}

}  // namespace ampcap
