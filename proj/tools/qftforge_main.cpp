#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qftforge/bench.hpp"
#include "qftforge/circuit.hpp"
#include "qftforge/hhl.hpp"
#include "qftforge/qft.hpp"
#include "qftforge/sampling.hpp"
#include "qftforge/shor.hpp"
#include "qftforge/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qftforge;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

// --seed wins; QFTFORGE_SEED is the fallback; 0 otherwise.
std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t seed_flag) {
    if (seed_opt->count() > 0) return seed_flag;
    if (const char* env = std::getenv("QFTFORGE_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

ordered_json histogram_json(const Histogram& hist) {
    ordered_json j;
    j["shots"] = hist.shots;
    j["seed"] = hist.seed;
    ordered_json counts = ordered_json::object();
    for (const auto& [key, value] : hist.counts) counts[key] = value;
    j["counts"] = counts;
    return j;
}

struct QftArgs {
    int n = 1;
    std::string variant = "interleaved";
    std::uint64_t input = 0;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    bool exact = false;
    bool dump = false;
};

int run_qft(const QftArgs& args) {
    if (args.input >= (std::uint64_t{1} << args.n)) {
        std::cerr << "error: --input must be < 2^n\n";
        return kExitUsage;
    }
    if (args.exact && args.n > 10) {
        std::cerr << "error: --exact is available only for n <= 10\n";
        return kExitUsage;
    }
    const qft::Variant variant =
        args.variant == "textbook" ? qft::Variant::Textbook : qft::Variant::Interleaved;
    const Circuit circuit = variant == qft::Variant::Textbook
                                ? qft::build_qft_textbook(args.n)
                                : qft::build_qft_interleaved(args.n);
    if (args.dump) {
        std::cout << to_text(circuit);
        return kExitOk;
    }
    const StateVector out = simulate(circuit, basis_state(args.n, args.input));
    if (args.exact) {
        ordered_json j;
        j["n"] = args.n;
        j["variant"] = qft::variant_name(variant);
        j["input"] = args.input;
        ordered_json amps = ordered_json::array();
        for (const cplx& a : out.amplitudes()) amps.push_back({a.real(), a.imag()});
        j["amplitudes"] = amps;
        j["probabilities"] = probabilities(out);
        std::cout << j.dump(2) << "\n";
    } else {
        const Histogram hist = sample_counts(out, args.shots, args.seed);
        std::cout << histogram_json(hist).dump(2) << "\n";
    }
    return kExitOk;
}

int run_verify(int max_n) {
    const auto checks = verify::run_oracle_suite(max_n);
    for (const auto& check : checks) {
        if (check.pass) {
            std::cout << check.name << " PASS\n";
        } else {
            std::cout << check.name << " FAIL (err=" << check.error << ")\n";
        }
    }
    return verify::all_passed(checks) ? kExitOk : kExitRuntime;
}

int run_shor(std::uint64_t shots, std::uint64_t seed, bool dump) {
    if (dump) {
        std::cout << to_text(shor::build_shor15());
        return kExitOk;
    }
    const shor::ShorResult result = shor::shor_factor(shor::kModulus, shor::kBase, shots, seed);
    ordered_json j;
    ordered_json counts = ordered_json::object();
    for (const auto& [key, value] : result.histogram.counts) counts[key] = value;
    j["counts"] = counts;
    j["success_rate"] = result.success_rate;
    if (result.factors) {
        j["factors"] = {(*result.factors)[0], (*result.factors)[1]};
    } else {
        j["factors"] = nullptr;
    }
    j["shots"] = result.histogram.shots;
    j["seed"] = result.histogram.seed;
    ordered_json outcomes = ordered_json::array();
    for (const auto& outcome : result.outcomes) {
        ordered_json o;
        o["y"] = outcome.measured;
        o["bits"] = bitstring_of(outcome.measured, shor::kCountingQubits);
        o["status"] = shor::status_name(outcome.status);
        if (outcome.period) o["period"] = *outcome.period; else o["period"] = nullptr;
        if (outcome.factors) {
            o["factors"] = {(*outcome.factors)[0], (*outcome.factors)[1]};
        } else {
            o["factors"] = nullptr;
        }
        outcomes.push_back(o);
    }
    j["outcomes"] = outcomes;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int run_hhl(int qpe, int solution, std::uint64_t shots, std::uint64_t seed, bool dump) {
    const hhl::HhlConfig cfg{qpe, solution};
    if (cfg.total_qubits() > kMaxQubits) {
        std::cerr << "error: --qpe + --solution + 1 must be <= " << kMaxQubits << "\n";
        return kExitUsage;
    }
    if (dump) {
        std::cout << to_text(hhl::build_hhl_template(cfg));
        return kExitOk;
    }
    const Histogram hist = hhl::run_hhl(cfg, shots, seed);
    std::cout << histogram_json(hist).dump(2) << "\n";
    return kExitOk;
}

int run_bench(int min_n, int max_n, int reps, std::uint64_t seed,
              const std::string& format, const std::string& out_path) {
    bench::ReportFormat fmt;
    if (format == "json") fmt = bench::ReportFormat::Json;
    else if (format == "csv") fmt = bench::ReportFormat::Csv;
    else if (format == "text") fmt = bench::ReportFormat::Text;
    else {
        std::cerr << "error: unknown --format '" << format << "'\n";
        return kExitUsage;
    }
    if (min_n < 1 || min_n > max_n || max_n > 24) {
        std::cerr << "error: need 1 <= --min-n <= --max-n <= 24\n";
        return kExitUsage;
    }
    const bench::BenchReport report = bench::compare_qft(min_n, max_n, reps, seed);
    const std::string rendered = bench::render_report(report, fmt);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return kExitRuntime;
        }
        file << rendered;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "qftforge — statevector toolkit for the swap-interleaved QFT construction.\n"
        "Conventions: little-endian basis indices (qubit i is bit 2^i); histogram\n"
        "keys are fixed-width bitstrings with qubit 0 rightmost; every randomized\n"
        "path is seeded (--seed, or the QFTFORGE_SEED environment variable, or 0)."};
    app.require_subcommand(1);

    QftArgs qft_args;
    auto* qft_cmd = app.add_subcommand("qft", "Build a QFT circuit and simulate it on a basis state");
    qft_cmd->add_option("--n", qft_args.n, "qubit count")->required()->check(CLI::Range(1, kMaxQubits));
    qft_cmd->add_option("--variant", qft_args.variant, "textbook | interleaved")
        ->check(CLI::IsMember({"textbook", "interleaved"}))
        ->capture_default_str();
    qft_cmd->add_option("--input", qft_args.input, "input basis index j")->capture_default_str();
    qft_cmd->add_option("--shots", qft_args.shots, "samples for the histogram")->check(CLI::PositiveNumber)->capture_default_str();
    auto* qft_seed = qft_cmd->add_option("--seed", qft_args.seed, "sampling seed");
    qft_cmd->add_flag("--exact", qft_args.exact, "print the statevector instead of sampling (n <= 10)");
    qft_cmd->add_flag("--dump", qft_args.dump, "print the circuit and exit");

    int verify_max_n = 6;
    auto* verify_cmd = app.add_subcommand("verify", "Run the QFT oracle suite and print PASS/FAIL per check");
    verify_cmd->add_option("--max-n", verify_max_n, "largest register size to check")->check(CLI::Range(1, 10))->capture_default_str();

    std::uint64_t shor_shots = 2048, shor_seed = 0;
    bool shor_dump = false;
    auto* shor_cmd = app.add_subcommand("shor", "Order-finding pipeline for N=15, a=7 with factor extraction");
    shor_cmd->add_option("--shots", shor_shots, "measurement shots")->check(CLI::PositiveNumber)->capture_default_str();
    auto* shor_seed_opt = shor_cmd->add_option("--seed", shor_seed, "sampling seed");
    shor_cmd->add_flag("--dump", shor_dump, "print the circuit and exit");

    int hhl_qpe = 6, hhl_solution = 8;
    std::uint64_t hhl_shots = 1024, hhl_seed = 0;
    bool hhl_dump = false;
    auto* hhl_cmd = app.add_subcommand("hhl", "Phase-estimation/rotation template circuit");
    hhl_cmd->add_option("--qpe", hhl_qpe, "QPE register size")->check(CLI::Range(1, 24))->capture_default_str();
    hhl_cmd->add_option("--solution", hhl_solution, "solution register size")->check(CLI::Range(1, 24))->capture_default_str();
    hhl_cmd->add_option("--shots", hhl_shots, "measurement shots")->check(CLI::PositiveNumber)->capture_default_str();
    auto* hhl_seed_opt = hhl_cmd->add_option("--seed", hhl_seed, "sampling seed");
    hhl_cmd->add_flag("--dump", hhl_dump, "print the circuit and exit");

    int bench_min_n = 2, bench_max_n = 10, bench_reps = 5;
    std::uint64_t bench_seed = 0;
    std::string bench_format = "text", bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "Compare textbook vs interleaved QFT metrics and wall time");
    bench_cmd->add_option("--min-n", bench_min_n, "smallest register size")->capture_default_str();
    bench_cmd->add_option("--max-n", bench_max_n, "largest register size")->capture_default_str();
    bench_cmd->add_option("--reps", bench_reps, "timing repetitions (median reported)")->check(CLI::Range(3, 1000))->capture_default_str();
    auto* bench_seed_opt = bench_cmd->add_option("--seed", bench_seed, "recorded seed");
    bench_cmd->add_option("--format", bench_format, "json | csv | text")->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (qft_cmd->parsed()) {
            qft_args.seed = resolve_seed(qft_seed, qft_args.seed);
            return run_qft(qft_args);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_max_n);
        }
        if (shor_cmd->parsed()) {
            return run_shor(shor_shots, resolve_seed(shor_seed_opt, shor_seed), shor_dump);
        }
        if (hhl_cmd->parsed()) {
            return run_hhl(hhl_qpe, hhl_solution, hhl_shots,
                           resolve_seed(hhl_seed_opt, hhl_seed), hhl_dump);
        }
        if (bench_cmd->parsed()) {
            return run_bench(bench_min_n, bench_max_n, bench_reps,
                             resolve_seed(bench_seed_opt, bench_seed), bench_format, bench_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
