#pragma once

#include <cstdint>
#include <vector>

#include "qftforge/circuit.hpp"
#include "qftforge/sampling.hpp"

namespace qftforge::hhl {

// Register layout of the phase-estimation/rotation template:
// QPE qubits 0..qpe-1, solution qubits qpe..qpe+sol-1, auxiliary last.
struct HhlConfig {
    int num_qpe_qubits = 6;
    int num_solution_qubits = 8;
    static constexpr int num_auxiliary_qubits = 1;

    int total_qubits() const { return num_qpe_qubits + num_solution_qubits + num_auxiliary_qubits; }
};

// H on each solution qubit; for each QPE qubit i an H then
// CP(pi/2^{i+j+1}, qpe_i, sol_j) for every solution qubit j; the swap-first
// inverse QFT on the QPE register; CRY(pi/2^{i+1}) from each QPE qubit onto
// the auxiliary. Barriers separate the stages as in the source circuit.
Circuit build_hhl_template(const HhlConfig& cfg);

// Measured qubits in classical-slot order: solution bits to slots
// 0..sol-1, auxiliary to slot sol.
std::vector<int> measured_qubits(const HhlConfig& cfg);

// Simulates from |0...0> and samples the measured-qubit marginal;
// keys have width sol+1 with the auxiliary bit leftmost.
Histogram run_hhl(const HhlConfig& cfg, std::uint64_t shots, std::uint64_t seed,
                  Exec exec = Exec::Auto);

}  // namespace qftforge::hhl
