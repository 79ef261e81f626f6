#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qftforge/circuit.hpp"
#include "qftforge/matrix.hpp"
#include "qftforge/state.hpp"

namespace qftforge::qft {

enum class Variant { Textbook, Interleaved };

// Fixed wire relabeling under which a variant's circuit equals dft_matrix(n).
// Determined once by oracle comparison at n = 3 and frozen: the textbook
// network needs none, the interleaved network reads out in reversed wire
// order (so do both of its inverses).
enum class ReadoutPermutation { Identity, Reversal };

ReadoutPermutation readout_permutation(Variant variant);
std::string_view variant_name(Variant variant);

// wire_map[i] for relabel()/relabel_wires(); identity or i -> n-1-i.
std::vector<int> wire_map(ReadoutPermutation perm, int num_qubits);

// Entry (k, j) = w^{kj} / sqrt(2^n) with w = e^{2*pi*i / 2^n}. n <= 10.
CMatrix dft_matrix(int num_qubits);

// Tensor-product form of the QFT of |j>: qubit m carries
// (|0> + w^{2^m j}|1>)/sqrt(2). Equals dft_matrix(n) column j. n <= 20.
StateVector factorized_qft_state(int num_qubits, std::uint64_t j);

// 2*pi*[0.x1 x2 ... xm] for binary digits x1..xm, m <= 53.
double binary_fraction_phase(std::span<const int> bits);

// Standard construction: per wire (highest first) one H then CP(pi/2),
// CP(pi/4), ... to lower wires, then floor(n/2) closing swaps.
Circuit build_qft_textbook(int num_qubits);

// Swap-interleaved construction: each stage applies H(0) then a
// CP(pi/2^{t+1}, t, t+1) + SWAP(t, t+1) cascade, so every two-qubit gate
// touches adjacent wires.
Circuit build_qft_interleaved(int num_qubits);

// Swap-first inverse QFT: floor(n/2) swaps, then per wire (highest first)
// H followed by negative-angle CPs to lower wires.
Circuit build_iqft_reversal(int num_qubits);

// Inverse of build_qft_interleaved (reversed ops, negated angles); for n = 4
// this is gate for gate the mirrored swap-then-CP cascade form.
Circuit build_iqft_interleaved(int num_qubits = 4);

}  // namespace qftforge::qft
