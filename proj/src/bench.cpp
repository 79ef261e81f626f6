#include "qftforge/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <stdexcept>

#include "qftforge/circuit.hpp"

namespace qftforge::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

Circuit build_variant(qft::Variant variant, int n) {
    return variant == qft::Variant::Textbook ? qft::build_qft_textbook(n)
                                             : qft::build_qft_interleaved(n);
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

}  // namespace

BenchReport compare_qft(int min_n, int max_n, int reps, std::uint64_t seed) {
    if (min_n < 1 || min_n > max_n || max_n > 24) {
        throw std::invalid_argument("compare_qft: need 1 <= min_n <= max_n <= 24");
    }
    if (reps < 3) {
        throw std::invalid_argument("compare_qft: reps must be >= 3");
    }

    BenchReport report;
    report.timestamp = iso8601_utc_now();
    report.qubit_cap = kMaxQubits;
    report.reps = reps;

    for (int n = min_n; n <= max_n; ++n) {
        for (qft::Variant variant : {qft::Variant::Textbook, qft::Variant::Interleaved}) {
            const Circuit circuit = build_variant(variant, n);
            const CircuitStats st = stats(circuit);

            std::vector<double> build_times(static_cast<std::size_t>(reps));
            for (double& t : build_times) {
                const auto start = Clock::now();
                const Circuit rebuilt = build_variant(variant, n);
                t = seconds_since(start);
                (void)rebuilt;
            }

            simulate(circuit, zero_state(n));  // warm-up
            std::vector<double> sim_times(static_cast<std::size_t>(reps));
            for (double& t : sim_times) {
                const auto start = Clock::now();
                const StateVector out = simulate(circuit, zero_state(n));
                t = seconds_since(start);
                (void)out;
            }

            BenchRow row;
            row.n = n;
            row.variant = variant;
            row.h_count = st.count(GateKind::H);
            row.cp_count = st.count(GateKind::CP);
            row.swap_count = st.count(GateKind::Swap);
            row.two_qubit_count = st.two_qubit_count;
            row.depth = st.depth;
            row.nearest_neighbor_only = st.nearest_neighbor_only;
            row.build_seconds = median(build_times);
            row.simulate_seconds = median(sim_times);
            row.shots = 0;
            row.seed = seed;
            report.rows.push_back(row);
        }
    }
    return report;
}

namespace {

std::string render_csv(const BenchReport& report) {
    std::string out = "n,variant,h,cp,swap,two_qubit,depth,nn_only,build_s,sim_s\n";
    for (const BenchRow& row : report.rows) {
        out += std::to_string(row.n);
        out += ',';
        out += qft::variant_name(row.variant);
        out += ',' + std::to_string(row.h_count);
        out += ',' + std::to_string(row.cp_count);
        out += ',' + std::to_string(row.swap_count);
        out += ',' + std::to_string(row.two_qubit_count);
        out += ',' + std::to_string(row.depth);
        out += ',';
        out += row.nearest_neighbor_only ? "true" : "false";
        out += ',' + format_double(row.build_seconds);
        out += ',' + format_double(row.simulate_seconds);
        out += '\n';
    }
    return out;
}

std::string render_json(const BenchReport& report) {
    std::string out = "{\n";
    out += "  \"metadata\": {\n";
    out += "    \"timestamp\": \"" + report.timestamp + "\",\n";
    out += "    \"qubit_cap\": " + std::to_string(report.qubit_cap) + ",\n";
    out += "    \"reps\": " + std::to_string(report.reps) + "\n";
    out += "  },\n";
    out += "  \"rows\": [";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const BenchRow& row = report.rows[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {";
        out += "\"n\": " + std::to_string(row.n);
        out += ", \"variant\": \"" + std::string(qft::variant_name(row.variant)) + "\"";
        out += ", \"h\": " + std::to_string(row.h_count);
        out += ", \"cp\": " + std::to_string(row.cp_count);
        out += ", \"swap\": " + std::to_string(row.swap_count);
        out += ", \"two_qubit\": " + std::to_string(row.two_qubit_count);
        out += ", \"depth\": " + std::to_string(row.depth);
        out += ", \"nn_only\": ";
        out += row.nearest_neighbor_only ? "true" : "false";
        out += ", \"build_s\": " + format_double(row.build_seconds);
        out += ", \"sim_s\": " + format_double(row.simulate_seconds);
        out += ", \"shots\": " + std::to_string(row.shots);
        out += ", \"seed\": " + std::to_string(row.seed);
        out += "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

std::string render_text(const BenchReport& report) {
    char line[256];
    std::string out;
    std::snprintf(line, sizeof(line), "%4s  %-11s %5s %5s %5s %9s %6s  %-7s %12s %12s\n",
                  "n", "variant", "h", "cp", "swap", "two_qubit", "depth", "nn_only",
                  "build_s", "sim_s");
    out += line;
    for (const BenchRow& row : report.rows) {
        std::snprintf(line, sizeof(line), "%4d  %-11s %5d %5d %5d %9d %6d  %-7s %12s %12s\n",
                      row.n, std::string(qft::variant_name(row.variant)).c_str(),
                      row.h_count, row.cp_count, row.swap_count, row.two_qubit_count,
                      row.depth, row.nearest_neighbor_only ? "true" : "false",
                      format_double(row.build_seconds).c_str(),
                      format_double(row.simulate_seconds).c_str());
        out += line;
    }
    return out;
}

}  // namespace

std::string render_report(const BenchReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return render_json(report);
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Text: return render_text(report);
    }
    throw std::invalid_argument("render_report: unknown format");
}

}  // namespace qftforge::bench
