#include "qftforge/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qftforge {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256StarStar::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Xoshiro256StarStar::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::string bitstring_of(std::uint64_t index, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((index >> i) & 1u) s[width - 1 - i] = '1';
    }
    return s;
}

Histogram sample_distribution(std::span<const double> probs, int width,
                              std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be >= 1");

    std::vector<double> cdf(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf.begin());

    Xoshiro256StarStar rng(seed);
    std::vector<std::uint64_t> hits(probs.size(), 0);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        const double u = rng.next_double();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t k = static_cast<std::size_t>(it - cdf.begin());
        if (k >= probs.size()) k = probs.size() - 1;  // u beyond rounded total
        ++hits[k];
    }

    Histogram hist;
    hist.shots = shots;
    hist.seed = seed;
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (hits[k] > 0) hist.counts.emplace(bitstring_of(k, width), hits[k]);
    }
    return hist;
}

Histogram sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    const std::vector<double> probs = probabilities(state);
    return sample_distribution(probs, state.num_qubits(), shots, seed);
}

}  // namespace qftforge
