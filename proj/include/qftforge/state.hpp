#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qftforge/gate.hpp"

namespace qftforge {

using cplx = std::complex<double>;

// ~1 GiB of complex doubles; desk-scale guard with benchmark headroom.
inline constexpr int kMaxQubits = 26;

// Which gate-kernel path to run. Auto takes the OpenMP path for large
// registers when the build has OpenMP, the serial reference otherwise.
enum class Exec { Auto, Serial, Parallel };

// Dense amplitudes of an n-qubit register, index k little-endian:
// bit i of k is the value of qubit i.
class StateVector {
public:
    explicit StateVector(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<cplx> amplitudes() { return amps_; }
    std::span<const cplx> amplitudes() const { return amps_; }

    const cplx& operator[](std::size_t k) const { return amps_[k]; }
    cplx& operator[](std::size_t k) { return amps_[k]; }

private:
    int num_qubits_;
    std::vector<cplx> amps_;
};

// |0...0>. 1 <= n <= kMaxQubits, otherwise std::length_error.
StateVector zero_state(int num_qubits);

// |j>. Throws std::out_of_range for j >= 2^n.
StateVector basis_state(int num_qubits, std::uint64_t index);

void apply_gate_in_place(StateVector& state, const GateOp& op, Exec exec = Exec::Auto);
StateVector apply_gate(const StateVector& state, const GateOp& op, Exec exec = Exec::Auto);

// Born-rule probabilities |alpha_k|^2, in index order.
std::vector<double> probabilities(const StateVector& state);

// Distribution over the listed qubits: bit i of the result index is taken
// from qubits[i]; all other qubits are summed out.
std::vector<double> marginal_probabilities(const StateVector& state, std::span<const int> qubits);

double state_norm(const StateVector& state);
cplx inner_product(const StateVector& a, const StateVector& b);

}  // namespace qftforge
