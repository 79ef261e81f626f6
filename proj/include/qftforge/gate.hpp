#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace qftforge {

enum class GateKind : std::uint8_t { H, X, P, CP, Swap, CSwap, CRY, Barrier };

inline constexpr int kGateKindCount = 8;

// Number of qubit operands for a kind (0 for Barrier, which spans the register).
int gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);
std::string_view gate_name(GateKind kind);

// One circuit instruction. Operands live in qubits[0..arity); for controlled
// kinds the control comes first. Angles are radians (P, CP, CRY only).
struct GateOp {
    GateKind kind = GateKind::Barrier;
    std::array<int, 3> qubits{-1, -1, -1};
    double angle = 0.0;

    static GateOp h(int q) { return {GateKind::H, {q, -1, -1}, 0.0}; }
    static GateOp x(int q) { return {GateKind::X, {q, -1, -1}, 0.0}; }
    static GateOp p(double phi, int q) { return {GateKind::P, {q, -1, -1}, phi}; }
    static GateOp cp(double phi, int a, int b) { return {GateKind::CP, {a, b, -1}, phi}; }
    static GateOp swap(int a, int b) { return {GateKind::Swap, {a, b, -1}, 0.0}; }
    static GateOp cswap(int control, int a, int b) { return {GateKind::CSwap, {control, a, b}, 0.0}; }
    static GateOp cry(double theta, int control, int target) { return {GateKind::CRY, {control, target, -1}, theta}; }
    static GateOp barrier() { return {GateKind::Barrier, {-1, -1, -1}, 0.0}; }

    int arity() const { return gate_arity(kind); }

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

// Throws std::out_of_range / std::invalid_argument on bad operands.
void validate_op(const GateOp& op, int num_qubits);

}  // namespace qftforge
