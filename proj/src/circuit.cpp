#include "qftforge/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qftforge {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::length_error("circuit width must be in [1, " + std::to_string(kMaxQubits) + "]");
    }
}

Circuit& Circuit::append(const GateOp& op) {
    validate_op(op, num_qubits_);
    ops_.push_back(op);
    return *this;
}

Circuit& Circuit::extend(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("extend: circuit widths differ");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

StateVector simulate(const Circuit& circuit, StateVector initial, Exec exec) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("simulate: state width does not match circuit width");
    }
    for (const GateOp& op : circuit.ops()) {
        apply_gate_in_place(initial, op, exec);
    }
    return initial;
}

Circuit inverse(const Circuit& circuit) {
    Circuit out(circuit.num_qubits());
    const auto& ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        GateOp op = *it;
        if (gate_has_angle(op.kind)) op.angle = -op.angle;
        out.append(op);
    }
    return out;
}

CircuitStats stats(const Circuit& circuit) {
    CircuitStats st;
    std::vector<int> level(circuit.num_qubits(), 0);
    for (const GateOp& op : circuit.ops()) {
        ++st.counts_by_kind[static_cast<int>(op.kind)];
        if (op.kind == GateKind::Barrier) {
            const int wall = *std::max_element(level.begin(), level.end());
            std::fill(level.begin(), level.end(), wall);
            continue;
        }
        const int arity = op.arity();
        int layer = 0;
        for (int i = 0; i < arity; ++i) layer = std::max(layer, level[op.qubits[i]]);
        for (int i = 0; i < arity; ++i) level[op.qubits[i]] = layer + 1;

        if (op.kind == GateKind::CSwap) {
            st.two_qubit_count += 2;
            st.nearest_neighbor_only = false;  // three-qubit, never NN-eligible
        } else if (arity == 2) {
            ++st.two_qubit_count;
            if (std::abs(op.qubits[0] - op.qubits[1]) != 1) st.nearest_neighbor_only = false;
        }
    }
    st.depth = *std::max_element(level.begin(), level.end());
    return st;
}

CMatrix unitary_of(const Circuit& circuit) {
    const int n = circuit.num_qubits();
    if (n > 10) throw std::length_error("unitary_of: capped at 10 qubits");
    const std::size_t dim = std::size_t{1} << n;
    CMatrix u(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const StateVector column = simulate(circuit, basis_state(n, j));
        for (std::size_t k = 0; k < dim; ++k) u(k, j) = column[k];
    }
    return u;
}

Circuit relabel(const Circuit& circuit, std::span<const int> wire_map) {
    const int n = circuit.num_qubits();
    if (static_cast<int>(wire_map.size()) != n) {
        throw std::invalid_argument("relabel: wire map size does not match circuit width");
    }
    Circuit out(n);
    for (GateOp op : circuit.ops()) {
        for (int i = 0; i < op.arity(); ++i) op.qubits[i] = wire_map[op.qubits[i]];
        out.append(op);
    }
    return out;
}

namespace {

// Angles in these circuits are dyadic fractions of pi; render them exactly.
std::string format_angle(double angle) {
    if (angle == 0.0) return "0";
    const char* sign = angle < 0.0 ? "-" : "";
    const double mag = std::abs(angle);
    double ref = std::numbers::pi;
    for (std::uint64_t den = 1; den <= (std::uint64_t{1} << 32); den <<= 1, ref /= 2.0) {
        if (mag == ref) {
            if (den == 1) return std::string(sign) + "pi";
            return std::string(sign) + "pi/" + std::to_string(den);
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", angle);
    return buf;
}

}  // namespace

std::string to_text(const Circuit& circuit) {
    std::string out;
    for (const GateOp& op : circuit.ops()) {
        out += gate_name(op.kind);
        if (gate_has_angle(op.kind)) {
            out += "(" + format_angle(op.angle) + ")";
        }
        for (int i = 0; i < op.arity(); ++i) {
            out += (i == 0 ? " q" : ",q") + std::to_string(op.qubits[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace qftforge
