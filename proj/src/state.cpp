#include "qftforge/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qftforge/kernels.hpp"

namespace qftforge {

namespace {

void check_width(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::length_error("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(num_qubits));
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
}

StateVector zero_state(int num_qubits) {
    StateVector state(num_qubits);
    state[0] = cplx{1.0, 0.0};
    return state;
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
    StateVector state(num_qubits);
    if (index >= state.dim()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
    state[index] = cplx{1.0, 0.0};
    return state;
}

void apply_gate_in_place(StateVector& state, const GateOp& op, Exec exec) {
    kernels::apply(state.amplitudes(), op, exec);
}

StateVector apply_gate(const StateVector& state, const GateOp& op, Exec exec) {
    StateVector out = state;
    apply_gate_in_place(out, op, exec);
    return out;
}

std::vector<double> probabilities(const StateVector& state) {
    std::vector<double> probs(state.dim());
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < probs.size(); ++k) {
        probs[k] = std::norm(amps[k]);
    }
    return probs;
}

std::vector<double> marginal_probabilities(const StateVector& state, std::span<const int> qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= state.num_qubits()) {
            throw std::out_of_range("marginal qubit index out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[j] == qubits[i]) throw std::invalid_argument("duplicate marginal qubit");
        }
    }
    std::vector<double> probs(std::size_t{1} << qubits.size(), 0.0);
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < state.dim(); ++k) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            out |= ((k >> qubits[i]) & 1u) << i;
        }
        probs[out] += std::norm(amps[k]);
    }
    return probs;
}

double state_norm(const StateVector& state) {
    double sum = 0.0;
    for (const cplx& a : state.amplitudes()) sum += std::norm(a);
    return std::sqrt(sum);
}

cplx inner_product(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    cplx sum{0.0, 0.0};
    for (std::size_t k = 0; k < a.dim(); ++k) {
        sum += std::conj(a[k]) * b[k];
    }
    return sum;
}

}  // namespace qftforge
