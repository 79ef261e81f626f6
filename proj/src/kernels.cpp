#include "qftforge/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace qftforge::kernels {

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

bool use_parallel(std::size_t dim, Exec exec) {
    switch (exec) {
        case Exec::Serial: return false;
        case Exec::Parallel: return parallel_available();
        case Exec::Auto: return parallel_available() && dim >= kParallelThresholdDim;
    }
    return false;
}

}  // namespace

void apply(std::span<cplx> amps, const GateOp& op, Exec exec) {
    const int num_qubits = std::countr_zero(amps.size());
    validate_op(op, num_qubits);
    const bool par = use_parallel(amps.size(), exec);
    const auto& q = op.qubits;
    switch (op.kind) {
        case GateKind::H:
            par ? parallel::hadamard(amps, q[0]) : serial::hadamard(amps, q[0]);
            break;
        case GateKind::X:
            par ? parallel::pauli_x(amps, q[0]) : serial::pauli_x(amps, q[0]);
            break;
        case GateKind::P:
            par ? parallel::phase(amps, q[0], op.angle) : serial::phase(amps, q[0], op.angle);
            break;
        case GateKind::CP:
            par ? parallel::cphase(amps, q[0], q[1], op.angle) : serial::cphase(amps, q[0], q[1], op.angle);
            break;
        case GateKind::Swap:
            par ? parallel::swap(amps, q[0], q[1]) : serial::swap(amps, q[0], q[1]);
            break;
        case GateKind::CSwap:
            par ? parallel::cswap(amps, q[0], q[1], q[2]) : serial::cswap(amps, q[0], q[1], q[2]);
            break;
        case GateKind::CRY:
            par ? parallel::cry(amps, q[0], q[1], op.angle) : serial::cry(amps, q[0], q[1], op.angle);
            break;
        case GateKind::Barrier:
            break;  // identity on the state
    }
}

}  // namespace qftforge::kernels
