#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qftforge/qft.hpp"

namespace qftforge::bench {

struct BenchRow {
    int n = 0;
    qft::Variant variant = qft::Variant::Textbook;
    int h_count = 0;
    int cp_count = 0;
    int swap_count = 0;
    int two_qubit_count = 0;
    int depth = 0;
    bool nearest_neighbor_only = false;
    double build_seconds = 0.0;
    double simulate_seconds = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // one per (n, variant), textbook first
    std::string timestamp;       // ISO 8601 UTC
    int qubit_cap = kMaxQubits;
    int reps = 0;
};

// For each n and variant: build, one warm-up simulation of |0...0>, then
// `reps` timed builds/simulations; records median wall times (monotonic
// clock) next to the exact structural metrics. 1 <= min_n <= max_n <= 24,
// reps >= 3. Runs strictly sequentially.
BenchReport compare_qft(int min_n, int max_n, int reps, std::uint64_t seed);

enum class ReportFormat { Json, Csv, Text };

// json: stable key order, floats with 9 significant digits.
// csv: header `n,variant,h,cp,swap,two_qubit,depth,nn_only,build_s,sim_s`.
// text: aligned table.
std::string render_report(const BenchReport& report, ReportFormat format);

}  // namespace qftforge::bench
