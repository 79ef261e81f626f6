#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qftforge/gate.hpp"
#include "qftforge/matrix.hpp"
#include "qftforge/state.hpp"

namespace qftforge {

// Qubit count plus an ordered instruction sequence. Immutable once built
// (the fluent appenders are for construction); safe to share across threads.
class Circuit {
public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateOp>& ops() const { return ops_; }

    Circuit& append(const GateOp& op);
    Circuit& h(int q) { return append(GateOp::h(q)); }
    Circuit& x(int q) { return append(GateOp::x(q)); }
    Circuit& p(double phi, int q) { return append(GateOp::p(phi, q)); }
    Circuit& cp(double phi, int a, int b) { return append(GateOp::cp(phi, a, b)); }
    Circuit& swap(int a, int b) { return append(GateOp::swap(a, b)); }
    Circuit& cswap(int control, int a, int b) { return append(GateOp::cswap(control, a, b)); }
    Circuit& cry(double theta, int control, int target) { return append(GateOp::cry(theta, control, target)); }
    Circuit& barrier() { return append(GateOp::barrier()); }

    // Appends all of other's ops; widths must match.
    Circuit& extend(const Circuit& other);

private:
    int num_qubits_;
    std::vector<GateOp> ops_;
};

struct CircuitStats {
    std::array<int, kGateKindCount> counts_by_kind{};
    int two_qubit_count = 0;
    int depth = 0;
    bool nearest_neighbor_only = true;

    int count(GateKind kind) const { return counts_by_kind[static_cast<int>(kind)]; }
};

// Applies all ops in order. Width mismatch -> std::invalid_argument.
StateVector simulate(const Circuit& circuit, StateVector initial, Exec exec = Exec::Auto);

// Ops reversed, P/CP/CRY angles negated; barriers keep their reversed slots.
Circuit inverse(const Circuit& circuit);

// Exact gate counts; depth by greedy earliest-layer assignment where a gate
// occupies one layer on all its qubits and BARRIER aligns every qubit to a
// common wall without consuming a layer; nearest_neighbor_only iff every
// multi-qubit op touches {i, i+1} (a CSwap always clears it).
// two_qubit_count = #CP + #Swap + 2 * #CSwap.
CircuitStats stats(const Circuit& circuit);

// Column j = simulate(circuit, |j>). Capped at 10 qubits (std::length_error).
CMatrix unitary_of(const Circuit& circuit);

// Same ops with qubit i renamed to wire_map[i].
Circuit relabel(const Circuit& circuit, std::span<const int> wire_map);

// Debug rendering, one op per line: `CP(pi/2) q0,q1`.
std::string to_text(const Circuit& circuit);

}  // namespace qftforge
