#pragma once

#include <complex>
#include <span>

#include "qftforge/gate.hpp"
#include "qftforge/state.hpp"

namespace qftforge::kernels {

// Gate kernels over a dense amplitude array (dim = 2^n, little-endian).
// Two implementations with identical signatures and identical arithmetic:
// `serial` is the reference, `parallel` adds OpenMP worksharing over the
// independent amplitude pairs. Both are in-place and deterministic.

namespace serial {
void hadamard(std::span<cplx> amps, int target);
void pauli_x(std::span<cplx> amps, int target);
void phase(std::span<cplx> amps, int target, double phi);
void cphase(std::span<cplx> amps, int a, int b, double phi);
void swap(std::span<cplx> amps, int a, int b);
void cswap(std::span<cplx> amps, int control, int a, int b);
void cry(std::span<cplx> amps, int control, int target, double theta);
}  // namespace serial

namespace parallel {
void hadamard(std::span<cplx> amps, int target);
void pauli_x(std::span<cplx> amps, int target);
void phase(std::span<cplx> amps, int target, double phi);
void cphase(std::span<cplx> amps, int a, int b, double phi);
void swap(std::span<cplx> amps, int a, int b);
void cswap(std::span<cplx> amps, int control, int a, int b);
void cry(std::span<cplx> amps, int control, int target, double theta);
}  // namespace parallel

// True when compiled with OpenMP.
bool parallel_available();

// Auto switches to the parallel path at this many amplitudes.
inline constexpr std::size_t kParallelThresholdDim = std::size_t{1} << 16;

// Validates operands against dim and dispatches to the chosen path.
void apply(std::span<cplx> amps, const GateOp& op, Exec exec);

}  // namespace qftforge::kernels
