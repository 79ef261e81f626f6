#include "qftforge/hhl.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "qftforge/qft.hpp"

namespace qftforge::hhl {

namespace {

void check_config(const HhlConfig& cfg) {
    if (cfg.num_qpe_qubits < 1 || cfg.num_solution_qubits < 1) {
        throw std::invalid_argument("HhlConfig: registers must be non-empty");
    }
    if (cfg.total_qubits() > kMaxQubits) {
        throw std::length_error("HhlConfig: total width exceeds " + std::to_string(kMaxQubits) + " qubits");
    }
}

double pi_over_pow2(int k) {
    return std::numbers::pi / static_cast<double>(std::uint64_t{1} << k);
}

}  // namespace

Circuit build_hhl_template(const HhlConfig& cfg) {
    check_config(cfg);
    const int qpe = cfg.num_qpe_qubits;
    const int sol = cfg.num_solution_qubits;
    const int aux = cfg.total_qubits() - 1;
    Circuit c(cfg.total_qubits());

    for (int j = 0; j < sol; ++j) c.h(qpe + j);
    c.barrier();

    for (int i = 0; i < qpe; ++i) {
        c.h(i);
        for (int j = 0; j < sol; ++j) {
            // cu(0, 0, lambda, 0) is a controlled phase.
            c.cp(pi_over_pow2(i + j + 1), i, qpe + j);
        }
    }
    c.barrier();

    const Circuit iqft = qft::build_iqft_reversal(qpe);
    for (const GateOp& op : iqft.ops()) c.append(op);
    c.barrier();

    for (int i = 0; i < qpe; ++i) {
        c.cry(pi_over_pow2(i + 1), i, aux);
    }
    c.barrier();
    return c;
}

std::vector<int> measured_qubits(const HhlConfig& cfg) {
    check_config(cfg);
    std::vector<int> qubits;
    qubits.reserve(static_cast<std::size_t>(cfg.num_solution_qubits) + 1);
    for (int j = 0; j < cfg.num_solution_qubits; ++j) {
        qubits.push_back(cfg.num_qpe_qubits + j);
    }
    qubits.push_back(cfg.total_qubits() - 1);
    return qubits;
}

Histogram run_hhl(const HhlConfig& cfg, std::uint64_t shots, std::uint64_t seed, Exec exec) {
    const Circuit circuit = build_hhl_template(cfg);
    const StateVector final_state = simulate(circuit, zero_state(cfg.total_qubits()), exec);
    const std::vector<int> measured = measured_qubits(cfg);
    const std::vector<double> marginal = marginal_probabilities(final_state, measured);
    return sample_distribution(marginal, static_cast<int>(measured.size()), shots, seed);
}

}  // namespace qftforge::hhl
