#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "qftforge/kernels.hpp"
#include "kernel_index.hpp"

// Reference kernels. Plain single-threaded loops over the independent
// amplitude groups; the OpenMP kernels must match these bit for bit.

namespace qftforge::kernels::serial {

using detail::expand2;
using detail::expand3;
using detail::insert_zero_bit;

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

void hadamard(std::span<cplx> amps, int target) {
    const std::size_t bit = std::size_t{1} << target;
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    for (std::int64_t h = 0; h < pairs; ++h) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(h), target);
        const std::size_t i1 = i0 | bit;
        const cplx a = amps[i0];
        const cplx b = amps[i1];
        amps[i0] = kInvSqrt2 * (a + b);
        amps[i1] = kInvSqrt2 * (a - b);
    }
}

void pauli_x(std::span<cplx> amps, int target) {
    const std::size_t bit = std::size_t{1} << target;
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    for (std::int64_t h = 0; h < pairs; ++h) {
        const std::size_t i0 = insert_zero_bit(static_cast<std::size_t>(h), target);
        std::swap(amps[i0], amps[i0 | bit]);
    }
}

void phase(std::span<cplx> amps, int target, double phi) {
    const cplx factor = std::polar(1.0, phi);
    const std::size_t bit = std::size_t{1} << target;
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);
    for (std::int64_t h = 0; h < pairs; ++h) {
        const std::size_t i1 = insert_zero_bit(static_cast<std::size_t>(h), target) | bit;
        amps[i1] *= factor;
    }
}

void cphase(std::span<cplx> amps, int a, int b, double phi) {
    const cplx factor = std::polar(1.0, phi);
    const std::size_t set_bits = (std::size_t{1} << a) | (std::size_t{1} << b);
    const std::int64_t groups = static_cast<std::int64_t>(amps.size() >> 2);
    for (std::int64_t h = 0; h < groups; ++h) {
        const std::size_t idx = expand2(static_cast<std::size_t>(h), a, b) | set_bits;
        amps[idx] *= factor;
    }
}

void swap(std::span<cplx> amps, int a, int b) {
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    const std::int64_t groups = static_cast<std::int64_t>(amps.size() >> 2);
    for (std::int64_t h = 0; h < groups; ++h) {
        const std::size_t base = expand2(static_cast<std::size_t>(h), a, b);
        std::swap(amps[base | abit], amps[base | bbit]);
    }
}

void cswap(std::span<cplx> amps, int control, int a, int b) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t abit = std::size_t{1} << a;
    const std::size_t bbit = std::size_t{1} << b;
    const std::int64_t groups = static_cast<std::int64_t>(amps.size() >> 3);
    for (std::int64_t h = 0; h < groups; ++h) {
        const std::size_t base = expand3(static_cast<std::size_t>(h), control, a, b) | cbit;
        std::swap(amps[base | abit], amps[base | bbit]);
    }
}

void cry(std::span<cplx> amps, int control, int target, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    const std::int64_t groups = static_cast<std::int64_t>(amps.size() >> 2);
    for (std::int64_t h = 0; h < groups; ++h) {
        const std::size_t i0 = expand2(static_cast<std::size_t>(h), control, target) | cbit;
        const std::size_t i1 = i0 | tbit;
        const cplx a0 = amps[i0];
        const cplx a1 = amps[i1];
        amps[i0] = c * a0 - s * a1;
        amps[i1] = s * a0 + c * a1;
    }
}

}  // namespace qftforge::kernels::serial
