#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "qftforge/state.hpp"

namespace qftforge {

// Outcome bitstrings -> counts. Keys are fixed-width with qubit 0 rightmost.
struct Histogram {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::map<std::string, std::uint64_t> counts;
};

// xoshiro256** (Blackman/Vigna), state seeded through splitmix64.
// Fixed algorithm and constants so seeded runs are bit-identical on every
// platform; doubles take the high 53 bits.
class Xoshiro256StarStar {
public:
    explicit Xoshiro256StarStar(std::uint64_t seed);
    std::uint64_t next_u64();
    double next_double();  // [0, 1)

private:
    std::array<std::uint64_t, 4> state_;
};

std::string bitstring_of(std::uint64_t index, int width);

// Inverse-CDF sampling over an explicit probability vector. The CDF is built
// in index order and each shot does one binary search, so results depend only
// on (probs, shots, seed).
Histogram sample_distribution(std::span<const double> probs, int width,
                              std::uint64_t shots, std::uint64_t seed);

// Measurement of the full register. shots >= 1, else std::invalid_argument.
Histogram sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace qftforge
