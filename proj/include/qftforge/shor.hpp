#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qftforge/circuit.hpp"
#include "qftforge/sampling.hpp"

namespace qftforge::shor {

inline constexpr std::uint64_t kModulus = 15;
inline constexpr std::uint64_t kBase = 7;
inline constexpr int kCountingQubits = 4;
inline constexpr int kWorkQubits = 4;

enum class ShotStatus { Success, TrivialMeasurement, InvalidPeriod };
std::string_view status_name(ShotStatus status);

// Classical analysis of one measured counting value y.
struct ShotOutcome {
    std::uint64_t measured = 0;
    std::optional<std::uint64_t> period;
    std::optional<std::array<std::uint64_t, 2>> factors;
    ShotStatus status = ShotStatus::InvalidPeriod;
};

struct ShorResult {
    Histogram histogram;               // counting register, width 4
    std::vector<ShotOutcome> outcomes; // one per distinct measured value
    double success_rate = 0.0;
    std::optional<std::array<std::uint64_t, 2>> factors;
};

// The controlled 5-CSWAP block of the order-finding circuit, verbatim:
// cswap pairs (t0,t2), (t1,t3), (t0,t1), (t1,t2), (t2,t3). As a bit
// permutation this is a cyclic rotation, i.e. x -> 2x mod 15 on the work
// value (15 stays put).
void append_modmul_network(Circuit& circuit, int control, const std::array<int, 4>& targets);

// Full 8-qubit order-finding circuit for N = 15: H on counting qubits 0-3,
// X on work qubit 4, the controlled multiplications from counting qubits 0
// and 1 (higher counting bits contribute the identity), then the interleaved
// IQFT connected through its reversal readout permutation so the counting
// register reads out exact multiples of 4. Only a = 7 is supported.
Circuit build_shor15(std::uint64_t a = kBase);

// Smallest convergent denominator r <= N of y/2^t with
// |y/2^t - s/r| <= 1/2^{t+1}; nullopt for y = 0 or when no convergent fits.
std::optional<std::uint64_t> continued_fraction_period(std::uint64_t y, int t_bits, std::uint64_t modulus);

// Continued fractions plus the standard repairs: failed candidates are
// retried as multiples k*r <= N; an even valid period with
// a^{r/2} != -1 (mod N) yields gcd(a^{r/2} +- 1, N).
ShotOutcome analyze_outcome(std::uint64_t y, int t_bits, std::uint64_t modulus, std::uint64_t base);

// Samples the counting register of build_shor15 and postprocesses every
// outcome. Aggregation iterates outcomes in key order, so results depend
// only on (shots, seed).
ShorResult shor_factor(std::uint64_t modulus, std::uint64_t base,
                       std::uint64_t shots, std::uint64_t seed);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

}  // namespace qftforge::shor
