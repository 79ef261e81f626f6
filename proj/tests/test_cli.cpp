#include <cstdio>
#include <cstdlib>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

const char* cli_path() {
    return std::getenv("QFTFORGE_CLI");
}

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(cli_path()) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("cli: qft --exact prints the plus-state amplitudes") {
    if (!cli_path()) {
        MESSAGE("QFTFORGE_CLI not set; skipping CLI tests");
        return;
    }
    const CliResult r = run_cli("qft --n 1 --variant interleaved --input 0 --exact");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    REQUIRE(j["amplitudes"].size() == 2);
    CHECK(j["amplitudes"][0][0].get<double>() == doctest::Approx(0.7071067811865476).epsilon(1e-12));
    CHECK(j["amplitudes"][1][0].get<double>() == doctest::Approx(0.7071067811865476).epsilon(1e-12));
    CHECK(j["amplitudes"][0][1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("cli: verify prints PASS lines and exits 0") {
    if (!cli_path()) return;
    const CliResult r = run_cli("verify --max-n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("qft-textbook n=4 PASS") != std::string::npos);
    CHECK(r.output.find("qft-interleaved n=4 PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: shor reports the factors") {
    if (!cli_path()) return;
    const CliResult r = run_cli("shor --shots 256 --seed 1");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["factors"][0] == 3);
    CHECK(j["factors"][1] == 5);
    CHECK(j["success_rate"].get<double>() >= 0.70);
    CHECK(j["counts"].is_object());
}

TEST_CASE("cli: hhl emits a histogram with auxiliary-extended keys") {
    if (!cli_path()) return;
    const CliResult r = run_cli("hhl --qpe 2 --solution 2 --shots 64 --seed 5");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["shots"] == 64);
    std::uint64_t total = 0;
    for (const auto& [key, value] : j["counts"].items()) {
        CHECK(key.size() == 3);
        total += value.get<std::uint64_t>();
    }
    CHECK(total == 64);
}

TEST_CASE("cli: bench csv has one row pair per size") {
    if (!cli_path()) return;
    const CliResult r = run_cli("bench --min-n 2 --max-n 6 --reps 3 --format csv");
    REQUIRE(r.exit_code == 0);
    std::size_t lines = 0;
    for (char ch : r.output) {
        if (ch == '\n') ++lines;
    }
    CHECK(lines == 11);  // header + 5 sizes x 2 variants
    CHECK(r.output.rfind("n,variant,", 0) == 0);
}

TEST_CASE("cli: usage errors exit with 2") {
    if (!cli_path()) return;
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("qft").exit_code == 2);                      // missing --n
    CHECK(run_cli("qft --n 40").exit_code == 2);               // out of range
    CHECK(run_cli("bench --format yaml").exit_code == 2);      // unknown format
    CHECK(run_cli("qft --n 12 --exact").exit_code == 2);       // exact beyond cap
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cli: env seed fallback is honored") {
    if (!cli_path()) return;
    const std::string base = "qft --n 2 --variant textbook --shots 128";
    const CliResult with_flag = run_cli(base + " --seed 123");
    const std::string env_command = std::string("QFTFORGE_SEED=123 ") + cli_path() + " " + base + " 2>/dev/null";
    FILE* pipe = popen(env_command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string env_output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) env_output.append(buffer, got);
    pclose(pipe);
    CHECK(with_flag.output == env_output);
}
