// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run as `acceptance_suite --cli /path/to/qftforge` so the determinism
// criterion can drive the real binary.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qftforge/bench.hpp"
#include "qftforge/circuit.hpp"
#include "qftforge/hhl.hpp"
#include "qftforge/qft.hpp"
#include "qftforge/sampling.hpp"
#include "qftforge/shor.hpp"
#include "qftforge/state.hpp"
#include "test_support.hpp"

namespace {

using namespace qftforge;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", number, label.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> reversal_map(int n) {
    return test_support::reversal_map(n);
}

// ---- criterion 1: builder unitaries vs the DFT oracle ----
void criterion_1() {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const CMatrix dft = qft::dft_matrix(n);
        const auto id_map = qft::wire_map(qft::ReadoutPermutation::Identity, n);
        const auto rev_map = qft::wire_map(qft::ReadoutPermutation::Reversal, n);
        worst = std::max(worst, max_abs_diff(relabel_wires(unitary_of(qft::build_qft_textbook(n)), id_map), dft));
        worst = std::max(worst, max_abs_diff(relabel_wires(unitary_of(qft::build_qft_interleaved(n)), rev_map), dft));
    }
    const double seconds = elapsed_seconds(start);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max err %.2e (tol 1e-10), %.2f s (limit 5 s)", worst, seconds);
    report(1, "qft-unitary-oracle", worst < 1e-10 && seconds < 5.0, detail);
}

// ---- criterion 2: factorization identity + recursive build-up ----
void criterion_2() {
    double worst = 0.0;
    for (int n = 1; n <= 5; ++n) {
        const CMatrix dft = qft::dft_matrix(n);
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
            const StateVector state = qft::factorized_qft_state(n, j);
            for (std::size_t k = 0; k < state.dim(); ++k) {
                worst = std::max(worst, std::abs(state[k] - dft(k, j)));
            }
        }
    }

    // Recursive build-up: lower factors built with the n-qubit root of unity
    // and the full j, tensored under the new top factor.
    double recursion_worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        const double tau_over_dim = 2.0 * std::numbers::pi / static_cast<double>(dim);
        const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
        for (std::uint64_t j = 0; j < dim; ++j) {
            std::vector<cplx> lower(dim >> 1, cplx{1.0, 0.0});
            for (int m = 0; m < n - 1; ++m) {
                const cplx phase = std::polar(1.0, tau_over_dim * static_cast<double>((j << m) & (dim - 1)));
                for (std::size_t k = 0; k < lower.size(); ++k) {
                    lower[k] *= inv_sqrt2 * (((k >> m) & 1u) ? phase : cplx{1.0, 0.0});
                }
            }
            const cplx top = std::polar(1.0, tau_over_dim * static_cast<double>((j << (n - 1)) & (dim - 1)));
            const StateVector full = qft::factorized_qft_state(n, j);
            for (std::size_t k = 0; k < full.dim(); ++k) {
                const cplx expected =
                    inv_sqrt2 * (((k >> (n - 1)) & 1u) ? top : cplx{1.0, 0.0}) * lower[k & ((dim >> 1) - 1)];
                recursion_worst = std::max(recursion_worst, std::abs(full[k] - expected));
            }
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "column err %.2e, recursion err %.2e (tol 1e-12)", worst, recursion_worst);
    report(2, "factorization-identity", worst < 1e-12 && recursion_worst < 1e-12, detail);
}

// ---- criterion 3: inverse compositions ----
void criterion_3() {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const CMatrix canonical_iqft =
            relabel_wires(unitary_of(qft::build_iqft_reversal(n)), reversal_map(n));
        const CMatrix product = multiply(canonical_iqft, unitary_of(qft::build_qft_textbook(n)));
        worst = std::max(worst, max_abs_diff(product, CMatrix::identity(product.dim())));
    }
    const CMatrix interleaved_product = multiply(unitary_of(qft::build_iqft_interleaved(4)),
                                                 unitary_of(qft::build_qft_interleaved(4)));
    worst = std::max(worst, max_abs_diff(interleaved_product, CMatrix::identity(16)));

    char detail[96];
    std::snprintf(detail, sizeof(detail), "max err %.2e (tol 1e-9)", worst);
    report(3, "inverse-consistency", worst < 1e-9, detail);
}

// ---- criterion 4: order-finding pipeline ----
void criterion_4() {
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;

    const StateVector final_state = simulate(shor::build_shor15(), zero_state(8));
    const std::vector<int> counting{0, 1, 2, 3};
    const auto marginal = marginal_probabilities(final_state, counting);
    double dist_err = 0.0;
    for (std::uint64_t y = 0; y < 16; ++y) {
        const double expected = (y % 4 == 0) ? 0.25 : 0.0;
        dist_err = std::max(dist_err, std::abs(marginal[y] - expected));
    }
    if (dist_err >= 1e-10) {
        pass = false;
        detail += "distribution err " + std::to_string(dist_err) + "; ";
    }

    const shor::ShorResult result = shor::shor_factor(15, 7, 2048, 1);
    const double four_sigma = 4.0 * std::sqrt(2048.0 * 0.25 * 0.75);
    for (const char* key : {"0000", "0100", "1000", "1100"}) {
        const auto it = result.histogram.counts.find(key);
        const double count = it == result.histogram.counts.end() ? 0.0 : static_cast<double>(it->second);
        if (std::abs(count - 512.0) > four_sigma) {
            pass = false;
            detail += std::string(key) + " count " + std::to_string(static_cast<int>(count)) + " outside 4-sigma; ";
        }
    }
    for (const auto& [key, count] : result.histogram.counts) {
        if (key != "0000" && key != "0100" && key != "1000" && key != "1100") {
            pass = false;
            detail += "unexpected outcome " + key + "; ";
        }
    }

    const auto y4 = shor::analyze_outcome(4, 4, 15, 7);
    const auto y8 = shor::analyze_outcome(8, 4, 15, 7);
    const auto y12 = shor::analyze_outcome(12, 4, 15, 7);
    const bool cf_ok = y4.period == 4 && y4.factors && (*y4.factors)[0] == 3 && (*y4.factors)[1] == 5 &&
                       y12.period == 4 && y12.factors && (*y12.factors)[0] == 3 && (*y12.factors)[1] == 5 &&
                       y8.period == 4 && y8.status == shor::ShotStatus::Success;
    if (!cf_ok) {
        pass = false;
        detail += "continued-fraction pipeline mismatch; ";
    }
    if (result.success_rate < 0.70) {
        pass = false;
        detail += "success rate " + std::to_string(result.success_rate) + " < 0.70; ";
    }

    const double seconds = elapsed_seconds(start);
    if (seconds >= 2.0) {
        pass = false;
        detail += "runtime " + std::to_string(seconds) + " s >= 2 s; ";
    }
    char summary[160];
    std::snprintf(summary, sizeof(summary), "dist err %.2e, success rate %.3f, %.2f s%s%s",
                  dist_err, result.success_rate, seconds, detail.empty() ? "" : "; ", detail.c_str());
    report(4, "shor15-pipeline", pass, summary);
}

// ---- criterion 5: structural benchmark ----
void criterion_5() {
    bool pass = true;
    std::string detail;
    for (int n = 2; n <= 12; ++n) {
        const CircuitStats textbook = stats(qft::build_qft_textbook(n));
        const CircuitStats interleaved = stats(qft::build_qft_interleaved(n));
        const int pairs = n * (n - 1) / 2;
        if (textbook.count(GateKind::H) != n || textbook.count(GateKind::CP) != pairs ||
            textbook.count(GateKind::Swap) != n / 2) {
            pass = false;
            detail += "textbook counts off at n=" + std::to_string(n) + "; ";
        }
        if (interleaved.count(GateKind::H) != n || interleaved.count(GateKind::CP) != pairs ||
            interleaved.count(GateKind::Swap) != pairs) {
            pass = false;
            detail += "interleaved counts off at n=" + std::to_string(n) + "; ";
        }
        if (!interleaved.nearest_neighbor_only) {
            pass = false;
            detail += "interleaved not NN at n=" + std::to_string(n) + "; ";
        }
        if (n >= 3 && textbook.nearest_neighbor_only) {
            pass = false;
            detail += "textbook NN at n=" + std::to_string(n) + "; ";
        }
    }

    const bench::BenchReport report_rows = bench::compare_qft(2, 12, 3, 0);
    for (const bench::BenchRow& row : report_rows.rows) {
        const int pairs = row.n * (row.n - 1) / 2;
        const bool textbook = row.variant == qft::Variant::Textbook;
        const int expected_swaps = textbook ? row.n / 2 : pairs;
        if (row.h_count != row.n || row.cp_count != pairs || row.swap_count != expected_swaps ||
            row.two_qubit_count != pairs + expected_swaps ||
            row.nearest_neighbor_only != (textbook ? row.n <= 2 : true)) {
            pass = false;
            detail += "bench row mismatch at n=" + std::to_string(row.n) + "; ";
        }
    }
    report(5, "structural-benchmark", pass, detail.empty() ? "counts exact for n=2..12" : detail);
}

// ---- criterion 6: phase-estimation template ----
void criterion_6() {
    bool pass = true;
    std::string detail;

    const hhl::HhlConfig small{2, 2};
    const Circuit circuit = hhl::build_hhl_template(small);
    const StateVector simulated = simulate(circuit, zero_state(small.total_qubits()));
    const CMatrix oracle = test_support::circuit_matrix_oracle(circuit);
    double state_err = 0.0;
    for (std::size_t k = 0; k < simulated.dim(); ++k) {
        state_err = std::max(state_err, std::abs(simulated[k] - oracle(k, 0)));
    }
    if (state_err >= 1e-10) {
        pass = false;
        detail += "state err vs oracle " + std::to_string(state_err) + "; ";
    }
    if (std::abs(state_norm(simulated) - 1.0) >= 1e-12) {
        pass = false;
        detail += "norm deviates; ";
    }

    const CircuitStats st = stats(circuit);
    const int qpe = small.num_qpe_qubits, sol = small.num_solution_qubits;
    if (st.count(GateKind::CP) != qpe * sol + qpe * (qpe - 1) / 2 ||
        st.count(GateKind::CRY) != qpe || st.count(GateKind::H) != sol + 2 * qpe ||
        st.count(GateKind::Swap) != qpe / 2) {
        pass = false;
        detail += "gate census mismatch; ";
    }

    const auto start = Clock::now();
    const Histogram hist = hhl::run_hhl({6, 8}, 1024, 3);
    const double seconds = elapsed_seconds(start);
    if (seconds >= 10.0) {
        pass = false;
        detail += "15-qubit run took " + std::to_string(seconds) + " s; ";
    }
    for (const auto& [key, count] : hist.counts) {
        if (key.size() != 9) {
            pass = false;
            detail += "key width " + std::to_string(key.size()) + " != 9; ";
            break;
        }
    }
    char summary[160];
    std::snprintf(summary, sizeof(summary), "state err %.2e, 15-qubit run %.2f s%s%s",
                  state_err, seconds, detail.empty() ? "" : "; ", detail.c_str());
    report(6, "hhl-template", pass, summary);
}

// ---- criterion 7: CLI determinism ----
struct CliRun {
    int exit_code = -1;
    std::string output;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    const std::string command = cli + " " + args + " 2>/dev/null";
    CliRun run;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return run;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) run.output.append(buffer, got);
    const int status = pclose(pipe);
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return run;
}

// CSV rows with the two trailing time columns removed.
std::string strip_time_columns(const std::string& csv) {
    std::string out;
    std::size_t line_start = 0;
    while (line_start < csv.size()) {
        std::size_t line_end = csv.find('\n', line_start);
        if (line_end == std::string::npos) line_end = csv.size();
        std::string line = csv.substr(line_start, line_end - line_start);
        for (int strip = 0; strip < 2; ++strip) {
            const std::size_t comma = line.rfind(',');
            if (comma != std::string::npos) line.erase(comma);
        }
        out += line;
        out += '\n';
        line_start = line_end + 1;
    }
    return out;
}

void criterion_7(const std::string& cli) {
    if (cli.empty()) {
        report(7, "cli-determinism", false, "no --cli path provided");
        return;
    }
    bool pass = true;
    std::string detail;
    const std::vector<std::string> seeded_commands = {
        "qft --n 3 --variant interleaved --input 5 --shots 512 --seed 9",
        "qft --n 2 --variant textbook --exact",
        "shor --shots 2048 --seed 1",
        "hhl --qpe 2 --solution 2 --shots 256 --seed 4",
        "verify --max-n 3",
    };
    for (const std::string& args : seeded_commands) {
        const CliRun first = run_cli(cli, args);
        const CliRun second = run_cli(cli, args);
        if (first.exit_code != 0 || second.exit_code != 0) {
            pass = false;
            detail += "`" + args + "` exited " + std::to_string(first.exit_code) + "; ";
        } else if (first.output != second.output) {
            pass = false;
            detail += "`" + args + "` output differs between runs; ";
        }
    }

    const std::string bench_args = "bench --min-n 2 --max-n 5 --reps 3 --format csv --seed 0";
    const CliRun bench_first = run_cli(cli, bench_args);
    const CliRun bench_second = run_cli(cli, bench_args);
    if (bench_first.exit_code != 0 || bench_second.exit_code != 0) {
        pass = false;
        detail += "bench exited nonzero; ";
    } else if (strip_time_columns(bench_first.output) != strip_time_columns(bench_second.output)) {
        pass = false;
        detail += "bench metric columns differ between runs; ";
    }
    report(7, "cli-determinism", pass, detail.empty() ? "seeded reruns byte-identical" : detail);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    }

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7(cli);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
