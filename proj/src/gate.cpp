#include "qftforge/gate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qftforge {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::P:
            return 1;
        case GateKind::CP:
        case GateKind::Swap:
        case GateKind::CRY:
            return 2;
        case GateKind::CSwap:
            return 3;
        case GateKind::Barrier:
            return 0;
    }
    return 0;
}

bool gate_has_angle(GateKind kind) {
    return kind == GateKind::P || kind == GateKind::CP || kind == GateKind::CRY;
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::P: return "P";
        case GateKind::CP: return "CP";
        case GateKind::Swap: return "SWAP";
        case GateKind::CSwap: return "CSWAP";
        case GateKind::CRY: return "CRY";
        case GateKind::Barrier: return "BARRIER";
    }
    return "?";
}

void validate_op(const GateOp& op, int num_qubits) {
    const int arity = gate_arity(op.kind);
    for (int i = 0; i < arity; ++i) {
        const int q = op.qubits[i];
        if (q < 0 || q >= num_qubits) {
            throw std::out_of_range(std::string(gate_name(op.kind)) + ": qubit index " +
                                    std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        for (int j = 0; j < i; ++j) {
            if (op.qubits[j] == q) {
                throw std::invalid_argument(std::string(gate_name(op.kind)) +
                                            ": duplicate qubit index " + std::to_string(q));
            }
        }
    }
    if (gate_has_angle(op.kind) && !std::isfinite(op.angle)) {
        throw std::invalid_argument(std::string(gate_name(op.kind)) + ": angle must be finite");
    }
}

}  // namespace qftforge
