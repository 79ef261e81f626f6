#include "qftforge/shor.hpp"

#include <numeric>
#include <stdexcept>

#include "qftforge/qft.hpp"

namespace qftforge::shor {

std::string_view status_name(ShotStatus status) {
    switch (status) {
        case ShotStatus::Success: return "success";
        case ShotStatus::TrivialMeasurement: return "trivial_measurement";
        case ShotStatus::InvalidPeriod: return "invalid_period";
    }
    return "?";
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("pow_mod: zero modulus");
    unsigned __int128 result = 1;
    unsigned __int128 b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1u) result = (result * b) % modulus;
        b = (b * b) % modulus;
        exponent >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

void append_modmul_network(Circuit& circuit, int control, const std::array<int, 4>& targets) {
    circuit.cswap(control, targets[0], targets[2]);
    circuit.cswap(control, targets[1], targets[3]);
    circuit.cswap(control, targets[0], targets[1]);
    circuit.cswap(control, targets[1], targets[2]);
    circuit.cswap(control, targets[2], targets[3]);
}

Circuit build_shor15(std::uint64_t a) {
    if (a != kBase) {
        throw std::invalid_argument("build_shor15: only a = 7 is supported");
    }
    const std::array<int, 4> work{4, 5, 6, 7};
    Circuit c(kCountingQubits + kWorkQubits);

    for (int q = 0; q < kCountingQubits; ++q) c.h(q);
    c.x(work[0]);  // work register starts in |1>
    c.barrier();

    // Controlled multiplications: once from counting qubit 0, twice from
    // counting qubit 1; the squared multiplier has order 2, and counting
    // qubits 2 and 3 would contribute the identity.
    append_modmul_network(c, 0, work);
    append_modmul_network(c, 1, work);
    append_modmul_network(c, 1, work);
    c.barrier();

    // Interleaved IQFT wired through its reversal readout permutation, so
    // the counting register reads out on {0, 4, 8, 12} exactly.
    const Circuit iqft = qft::build_iqft_interleaved(kCountingQubits);
    for (GateOp op : iqft.ops()) {
        for (int i = 0; i < op.arity(); ++i) {
            op.qubits[i] = kCountingQubits - 1 - op.qubits[i];
        }
        c.append(op);
    }
    c.barrier();
    return c;
}

std::optional<std::uint64_t> continued_fraction_period(std::uint64_t y, int t_bits, std::uint64_t modulus) {
    if (t_bits < 1 || t_bits > 62) throw std::out_of_range("continued_fraction_period: t_bits must be in [1, 62]");
    const std::uint64_t denom = std::uint64_t{1} << t_bits;
    if (y >= denom) throw std::out_of_range("continued_fraction_period: y out of range");
    if (modulus < 2) throw std::invalid_argument("continued_fraction_period: modulus must be >= 2");
    if (y == 0) return std::nullopt;

    // Convergents h/k of y/2^t; accept the first k <= N within 1/2^{t+1}.
    // Seeds are h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
    std::uint64_t num = y;
    std::uint64_t den = denom;
    std::uint64_t h_prev = 0, h_curr = 1;
    std::uint64_t k_prev = 1, k_curr = 0;
    while (den != 0) {
        const std::uint64_t a = num / den;
        const std::uint64_t rem = num % den;
        const std::uint64_t h_next = a * h_curr + h_prev;
        const std::uint64_t k_next = a * k_curr + k_prev;
        h_prev = h_curr; h_curr = h_next;
        k_prev = k_curr; k_curr = k_next;

        if (k_curr > modulus) break;
        // |y/2^t - h/k| <= 1/2^{t+1}  <=>  2*|y*k - h*2^t| <= k
        const __int128 delta = static_cast<__int128>(y) * k_curr - static_cast<__int128>(h_curr) * denom;
        const __int128 abs_delta = delta < 0 ? -delta : delta;
        if (2 * abs_delta <= static_cast<__int128>(k_curr) && k_curr >= 1) {
            return k_curr;
        }
        num = den;
        den = rem;
    }
    return std::nullopt;
}

ShotOutcome analyze_outcome(std::uint64_t y, int t_bits, std::uint64_t modulus, std::uint64_t base) {
    ShotOutcome out;
    out.measured = y;
    if (y == 0) {
        out.status = ShotStatus::TrivialMeasurement;
        return out;
    }
    const auto candidate = continued_fraction_period(y, t_bits, modulus);
    if (!candidate) {
        out.status = ShotStatus::InvalidPeriod;
        return out;
    }

    // The raw convergent denominator can be a proper divisor of the order;
    // scan its multiples up to N for the true period.
    std::uint64_t period = 0;
    for (std::uint64_t r = *candidate; r <= modulus; r += *candidate) {
        if (pow_mod(base, r, modulus) == 1) {
            period = r;
            break;
        }
    }
    if (period == 0) {
        out.status = ShotStatus::InvalidPeriod;
        return out;
    }
    out.period = period;

    if (period % 2 != 0) {
        out.status = ShotStatus::InvalidPeriod;
        return out;
    }
    const std::uint64_t half_power = pow_mod(base, period / 2, modulus);
    if (half_power == modulus - 1) {
        out.status = ShotStatus::InvalidPeriod;
        return out;
    }
    const std::uint64_t f1 = std::gcd(half_power - 1, modulus);
    const std::uint64_t f2 = std::gcd(half_power + 1, modulus);
    for (std::uint64_t f : {f1, f2}) {
        if (f > 1 && f < modulus) {
            const std::uint64_t g = modulus / f;
            out.factors = {std::min(f, g), std::max(f, g)};
            out.status = ShotStatus::Success;
            return out;
        }
    }
    out.status = ShotStatus::InvalidPeriod;
    return out;
}

ShorResult shor_factor(std::uint64_t modulus, std::uint64_t base,
                       std::uint64_t shots, std::uint64_t seed) {
    if (modulus != kModulus || base != kBase) {
        throw std::invalid_argument("shor_factor: only (N, a) = (15, 7) is supported");
    }

    const Circuit circuit = build_shor15(base);
    const StateVector final_state = simulate(circuit, zero_state(circuit.num_qubits()));
    const std::array<int, 4> counting{0, 1, 2, 3};
    const std::vector<double> marginal = marginal_probabilities(final_state, counting);

    ShorResult result;
    result.histogram = sample_distribution(marginal, kCountingQubits, shots, seed);

    // Key order is fixed, so the aggregate is seed-deterministic.
    std::uint64_t successes = 0;
    for (const auto& [key, count] : result.histogram.counts) {
        const std::uint64_t y = std::stoull(key, nullptr, 2);
        ShotOutcome outcome = analyze_outcome(y, kCountingQubits, modulus, base);
        if (outcome.status == ShotStatus::Success) {
            successes += count;
            if (!result.factors) result.factors = outcome.factors;
        }
        result.outcomes.push_back(std::move(outcome));
    }
    result.success_rate = static_cast<double>(successes) / static_cast<double>(shots);
    return result;
}

}  // namespace qftforge::shor
