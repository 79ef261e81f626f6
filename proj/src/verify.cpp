#include "qftforge/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qftforge/circuit.hpp"
#include "qftforge/matrix.hpp"
#include "qftforge/qft.hpp"

namespace qftforge::verify {

namespace {

using qft::ReadoutPermutation;
using qft::Variant;

// Circuit unitary after the variant's documented wire relabeling.
CMatrix canonical_unitary(const Circuit& circuit, ReadoutPermutation perm) {
    const CMatrix u = unitary_of(circuit);
    return relabel_wires(u, qft::wire_map(perm, circuit.num_qubits()));
}

Check unitary_check(Variant variant, int n) {
    const Circuit circuit = variant == Variant::Textbook ? qft::build_qft_textbook(n)
                                                         : qft::build_qft_interleaved(n);
    const CMatrix canon = canonical_unitary(circuit, qft::readout_permutation(variant));
    const double err = max_abs_diff(canon, qft::dft_matrix(n));
    return {"qft-" + std::string(qft::variant_name(variant)) + " n=" + std::to_string(n),
            err < 1e-10, err};
}

Check factorization_check(int n) {
    const CMatrix dft = qft::dft_matrix(n);
    double err = 0.0;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
        const StateVector state = qft::factorized_qft_state(n, j);
        for (std::size_t k = 0; k < state.dim(); ++k) {
            err = std::max(err, std::abs(state[k] - dft(k, j)));
        }
    }
    return {"factorization n=" + std::to_string(n), err < 1e-12, err};
}

// The recursive build-up: the n-qubit product state is the (n-1)-factor
// product (with the n-qubit root of unity and the full j) under a new
// top factor (|0> + w^{2^{n-1} j}|1>)/sqrt(2).
Check recursion_check(int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double tau_over_dim = 2.0 * std::numbers::pi / static_cast<double>(dim);
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    double err = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        std::vector<cplx> lower(std::size_t{1} << (n - 1), cplx{1.0, 0.0});
        for (int m = 0; m < n - 1; ++m) {
            const cplx phase = std::polar(1.0, tau_over_dim * static_cast<double>((j << m) & (dim - 1)));
            for (std::size_t k = 0; k < lower.size(); ++k) {
                lower[k] *= inv_sqrt2 * (((k >> m) & 1u) ? phase : cplx{1.0, 0.0});
            }
        }
        const cplx top1 = std::polar(1.0, tau_over_dim * static_cast<double>((j << (n - 1)) & (dim - 1)));
        const StateVector full = qft::factorized_qft_state(n, j);
        for (std::size_t k = 0; k < full.dim(); ++k) {
            const bool top_set = (k >> (n - 1)) & 1u;
            const cplx expected = inv_sqrt2 * (top_set ? top1 : cplx{1.0, 0.0}) * lower[k & (lower.size() - 1)];
            err = std::max(err, std::abs(full[k] - expected));
        }
    }
    return {"recursion n=" + std::to_string(n), err < 1e-12, err};
}

// exp(i * 2*pi*[0.b_m ... b_0]) must equal w^{2^{n-1-m} j}.
Check binary_fraction_check(int n) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    const double tau_over_dim = 2.0 * std::numbers::pi / static_cast<double>(dim);
    double err = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (int m = 0; m < n; ++m) {
            std::vector<int> bits(static_cast<std::size_t>(m) + 1);
            for (int i = 0; i <= m; ++i) bits[i] = static_cast<int>((j >> (m - i)) & 1u);
            const cplx lhs = std::polar(1.0, qft::binary_fraction_phase(bits));
            const std::uint64_t e = (j << (n - 1 - m)) & (dim - 1);
            const cplx rhs = std::polar(1.0, tau_over_dim * static_cast<double>(e));
            err = std::max(err, std::abs(lhs - rhs));
        }
    }
    return {"binary-fraction n=" + std::to_string(n), err < 1e-12, err};
}

Check iqft_reversal_check(int n) {
    const CMatrix iqft = canonical_unitary(qft::build_iqft_reversal(n), ReadoutPermutation::Reversal);
    const CMatrix forward = unitary_of(qft::build_qft_textbook(n));
    const double err = max_abs_diff(multiply(iqft, forward), CMatrix::identity(iqft.dim()));
    return {"iqft-reversal n=" + std::to_string(n), err < 1e-9, err};
}

Check iqft_interleaved_check(int n) {
    const CMatrix iqft = unitary_of(qft::build_iqft_interleaved(n));
    const CMatrix forward = unitary_of(qft::build_qft_interleaved(n));
    const double err = max_abs_diff(multiply(iqft, forward), CMatrix::identity(iqft.dim()));
    return {"iqft-interleaved n=" + std::to_string(n), err < 1e-9, err};
}

}  // namespace

std::vector<Check> run_oracle_suite(int max_n) {
    if (max_n < 1 || max_n > 10) {
        throw std::invalid_argument("run_oracle_suite: max_n must be in [1, 10]");
    }
    std::vector<Check> checks;
    for (int n = 1; n <= max_n; ++n) {
        checks.push_back(unitary_check(Variant::Textbook, n));
        checks.push_back(unitary_check(Variant::Interleaved, n));
        checks.push_back(factorization_check(n));
        if (n >= 2) checks.push_back(recursion_check(n));
        checks.push_back(binary_fraction_check(n));
        checks.push_back(iqft_reversal_check(n));
        checks.push_back(iqft_interleaved_check(n));
    }
    return checks;
}

bool all_passed(const std::vector<Check>& checks) {
    for (const Check& check : checks) {
        if (!check.pass) return false;
    }
    return true;
}

}  // namespace qftforge::verify
