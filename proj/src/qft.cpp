#include "qftforge/qft.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qftforge::qft {

ReadoutPermutation readout_permutation(Variant variant) {
    switch (variant) {
        case Variant::Textbook: return ReadoutPermutation::Identity;
        case Variant::Interleaved: return ReadoutPermutation::Reversal;
    }
    return ReadoutPermutation::Identity;
}

std::string_view variant_name(Variant variant) {
    return variant == Variant::Textbook ? "textbook" : "interleaved";
}

std::vector<int> wire_map(ReadoutPermutation perm, int num_qubits) {
    std::vector<int> map(num_qubits);
    std::iota(map.begin(), map.end(), 0);
    if (perm == ReadoutPermutation::Reversal) {
        std::reverse(map.begin(), map.end());
    }
    return map;
}

namespace {

void check_builder_width(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::length_error("QFT builder width must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
}

// pi / 2^k, exact in double.
double pi_over_pow2(int k) {
    return std::numbers::pi / static_cast<double>(std::uint64_t{1} << k);
}

}  // namespace

CMatrix dft_matrix(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 10) {
        throw std::length_error("dft_matrix: capped at 10 qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double inv_sqrt_dim = 1.0 / std::sqrt(static_cast<double>(dim));
    const double tau_over_dim = 2.0 * std::numbers::pi / static_cast<double>(dim);
    CMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < dim; ++j) {
            // w^{kj} with the exponent reduced mod 2^n keeps the argument small.
            const std::size_t e = (k * j) & (dim - 1);
            m(k, j) = std::polar(inv_sqrt_dim, tau_over_dim * static_cast<double>(e));
        }
    }
    return m;
}

StateVector factorized_qft_state(int num_qubits, std::uint64_t j) {
    if (num_qubits < 1 || num_qubits > 20) {
        throw std::length_error("factorized_qft_state: capped at 20 qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (j >= dim) {
        throw std::out_of_range("factorized_qft_state: basis index out of range");
    }

    const double tau_over_dim = 2.0 * std::numbers::pi / static_cast<double>(dim);
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

    // Grow the tensor product one qubit at a time: qubit m contributes the
    // factor (|0> + w^{2^m j}|1>)/sqrt(2).
    StateVector state(num_qubits);
    state[0] = cplx{1.0, 0.0};
    for (int m = 0; m < num_qubits; ++m) {
        const std::uint64_t e = (j << m) & (dim - 1);
        const cplx phase = std::polar(1.0, tau_over_dim * static_cast<double>(e));
        const std::uint64_t block = std::uint64_t{1} << m;
        for (std::uint64_t k = 0; k < block; ++k) {
            const cplx lower = state[k];
            state[k] = inv_sqrt2 * lower;
            state[k | block] = inv_sqrt2 * phase * lower;
        }
    }
    return state;
}

double binary_fraction_phase(std::span<const int> bits) {
    if (bits.empty() || bits.size() > 53) {
        throw std::invalid_argument("binary_fraction_phase: need 1..53 digits");
    }
    std::uint64_t numerator = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) {
            throw std::invalid_argument("binary_fraction_phase: digits must be 0 or 1");
        }
        numerator = (numerator << 1) | static_cast<std::uint64_t>(bits[i]);
    }
    const double denom = static_cast<double>(std::uint64_t{1} << bits.size());
    return 2.0 * std::numbers::pi * (static_cast<double>(numerator) / denom);
}

Circuit build_qft_textbook(int num_qubits) {
    check_builder_width(num_qubits);
    Circuit c(num_qubits);
    for (int i = num_qubits - 1; i >= 0; --i) {
        c.h(i);
        for (int j = i - 1; j >= 0; --j) {
            c.cp(pi_over_pow2(i - j), j, i);
        }
    }
    for (int i = 0; i < num_qubits / 2; ++i) {
        c.swap(i, num_qubits - 1 - i);
    }
    return c;
}

Circuit build_qft_interleaved(int num_qubits) {
    check_builder_width(num_qubits);
    Circuit c(num_qubits);
    for (int stage = 0; stage < num_qubits; ++stage) {
        c.h(0);
        for (int t = 0; t < num_qubits - 1 - stage; ++t) {
            c.cp(pi_over_pow2(t + 1), t, t + 1);
            c.swap(t, t + 1);
        }
    }
    return c;
}

Circuit build_iqft_reversal(int num_qubits) {
    check_builder_width(num_qubits);
    Circuit c(num_qubits);
    for (int i = 0; i < num_qubits / 2; ++i) {
        c.swap(i, num_qubits - 1 - i);
    }
    for (int i = num_qubits - 1; i >= 0; --i) {
        c.h(i);
        for (int j = i - 1; j >= 0; --j) {
            c.cp(-pi_over_pow2(i - j), j, i);
        }
    }
    return c;
}

Circuit build_iqft_interleaved(int num_qubits) {
    check_builder_width(num_qubits);
    return inverse(build_qft_interleaved(num_qubits));
}

}  // namespace qftforge::qft
