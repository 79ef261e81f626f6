#include <array>
#include <stdexcept>

#include <doctest.h>

#include "qftforge/qft.hpp"
#include "qftforge/shor.hpp"
#include "test_support.hpp"

using namespace qftforge;

namespace {

// Work value decoded from a 5-qubit basis index (control = qubit 0).
std::uint64_t apply_network_to_value(std::uint64_t x, bool control_on) {
    Circuit c(5);
    shor::append_modmul_network(c, 0, {1, 2, 3, 4});
    const std::uint64_t index = (x << 1) | (control_on ? 1u : 0u);
    const StateVector out = simulate(c, basis_state(5, index));
    for (std::uint64_t k = 0; k < out.dim(); ++k) {
        if (std::abs(out[k] - cplx{1.0, 0.0}) < 1e-12) return k >> 1;
    }
    FAIL("network did not map a basis state to a basis state");
    return 0;
}

}  // namespace

TEST_CASE("pow_mod") {
    CHECK(shor::pow_mod(7, 0, 15) == 1);
    CHECK(shor::pow_mod(7, 1, 15) == 7);
    CHECK(shor::pow_mod(7, 2, 15) == 4);
    CHECK(shor::pow_mod(7, 4, 15) == 1);
    CHECK(shor::pow_mod(2, 4, 15) == 1);
}

TEST_CASE("controlled multiplier network truth table") {
    // Enumerating the 5-CSWAP block over all 16 work values shows it is the
    // cyclic rotation x -> 2x mod 15 (with 15 fixed), order 4 -- the same
    // order as multiplication by 7, which the classical stage uses.
    for (std::uint64_t x = 0; x < 15; ++x) {
        CHECK(apply_network_to_value(x, true) == (2 * x) % 15);
    }
    CHECK(apply_network_to_value(15, true) == 15);

    for (std::uint64_t x = 0; x < 16; ++x) {
        CHECK(apply_network_to_value(x, false) == x);
    }
}

TEST_CASE("multiplier network is a permutation with order 4") {
    Circuit four_times(5);
    for (int i = 0; i < 4; ++i) shor::append_modmul_network(four_times, 0, {1, 2, 3, 4});
    for (std::uint64_t j = 0; j < 32; ++j) {
        const StateVector out = simulate(four_times, basis_state(5, j));
        CHECK(std::abs(out[j] - cplx{1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("build_shor15 structure") {
    CHECK_THROWS_AS(shor::build_shor15(2), std::invalid_argument);

    const Circuit c = shor::build_shor15();
    CHECK(c.num_qubits() == 8);
    const CircuitStats st = stats(c);
    CHECK(st.count(GateKind::CSwap) == 15);  // 3 network applications x 5
    CHECK(st.count(GateKind::X) == 1);
    CHECK(st.count(GateKind::H) == 4 + 4);   // counting prep + IQFT
}

TEST_CASE("counting register marginal is exactly quarters on {0,4,8,12}") {
    const Circuit c = shor::build_shor15();
    const StateVector final_state = simulate(c, zero_state(8));
    CHECK(std::abs(state_norm(final_state) - 1.0) < 1e-12);

    const std::vector<int> counting{0, 1, 2, 3};
    const auto marginal = marginal_probabilities(final_state, counting);
    for (std::uint64_t y = 0; y < 16; ++y) {
        if (y % 4 == 0) {
            CHECK(std::abs(marginal[y] - 0.25) < 1e-10);
        } else {
            CHECK(marginal[y] < 1e-12);
        }
    }
}

TEST_CASE("work register marginal is the multiplier orbit of 1") {
    const StateVector final_state = simulate(shor::build_shor15(), zero_state(8));
    const std::vector<int> work{4, 5, 6, 7};
    const auto marginal = marginal_probabilities(final_state, work);
    for (std::uint64_t v = 0; v < 16; ++v) {
        if (v == 1 || v == 2 || v == 4 || v == 8) {
            CHECK(std::abs(marginal[v] - 0.25) < 1e-10);
        } else {
            CHECK(marginal[v] < 1e-12);
        }
    }
}

TEST_CASE("wiring the counting IQFT without its readout permutation spreads the outcome") {
    // Same circuit but with the IQFT attached in raw wire order; the counting
    // distribution leaks far outside {0, 4, 8, 12}.
    Circuit c(8);
    for (int q = 0; q < 4; ++q) c.h(q);
    c.x(4);
    shor::append_modmul_network(c, 0, {4, 5, 6, 7});
    shor::append_modmul_network(c, 1, {4, 5, 6, 7});
    shor::append_modmul_network(c, 1, {4, 5, 6, 7});
    for (const GateOp& op : qft::build_iqft_interleaved(4).ops()) c.append(op);

    const StateVector final_state = simulate(c, zero_state(8));
    const std::vector<int> counting{0, 1, 2, 3};
    const auto marginal = marginal_probabilities(final_state, counting);
    double off_support = 0.0;
    for (std::uint64_t y = 0; y < 16; ++y) {
        if (y % 4 != 0) off_support += marginal[y];
    }
    CHECK(off_support > 0.4);
}

TEST_CASE("continued fraction convergents") {
    CHECK(shor::continued_fraction_period(4, 4, 15) == 4);
    CHECK(shor::continued_fraction_period(8, 4, 15) == 2);
    CHECK(shor::continued_fraction_period(12, 4, 15) == 4);
    CHECK_FALSE(shor::continued_fraction_period(0, 4, 15).has_value());

    CHECK_THROWS_AS(shor::continued_fraction_period(16, 4, 15), std::out_of_range);
    CHECK_THROWS_AS(shor::continued_fraction_period(1, 0, 15), std::out_of_range);
    CHECK_THROWS_AS(shor::continued_fraction_period(1, 4, 1), std::invalid_argument);

    // Exhaustive t=4, N=15: any returned r fits the phase-estimation bound.
    for (std::uint64_t y = 0; y < 16; ++y) {
        const auto r = shor::continued_fraction_period(y, 4, 15);
        if (!r) continue;
        CHECK(*r >= 1);
        CHECK(*r <= 15);
        bool close = false;
        for (std::uint64_t s = 0; s <= *r; ++s) {
            const double lhs = std::abs(static_cast<double>(y) / 16.0 -
                                        static_cast<double>(s) / static_cast<double>(*r));
            if (lhs <= 1.0 / 32.0 + 1e-15) close = true;
        }
        CHECK(close);
    }
}

TEST_CASE("outcome analysis and the multiple-repair step") {
    const auto y4 = shor::analyze_outcome(4, 4, 15, 7);
    CHECK(y4.status == shor::ShotStatus::Success);
    CHECK(y4.period == 4);
    REQUIRE(y4.factors.has_value());
    CHECK((*y4.factors)[0] == 3);
    CHECK((*y4.factors)[1] == 5);

    const auto y0 = shor::analyze_outcome(0, 4, 15, 7);
    CHECK(y0.status == shor::ShotStatus::TrivialMeasurement);
    CHECK_FALSE(y0.period.has_value());

    // y = 8 gives raw candidate r = 2, which fails 7^2 = 4 != 1 and is
    // repaired to r = 4 by the multiple search.
    const auto y8 = shor::analyze_outcome(8, 4, 15, 7);
    CHECK(y8.status == shor::ShotStatus::Success);
    CHECK(y8.period == 4);
    REQUIRE(y8.factors.has_value());
    CHECK((*y8.factors)[0] == 3);
    CHECK((*y8.factors)[1] == 5);

    const auto y12 = shor::analyze_outcome(12, 4, 15, 7);
    CHECK(y12.status == shor::ShotStatus::Success);
    CHECK(y12.period == 4);
}

TEST_CASE("shor_factor end to end") {
    CHECK_THROWS_AS(shor::shor_factor(21, 2, 16, 1), std::invalid_argument);

    const shor::ShorResult result = shor::shor_factor(15, 7, 2048, 1);
    std::uint64_t total = 0;
    for (const auto& [key, count] : result.histogram.counts) {
        const bool supported = key == "0000" || key == "0100" || key == "1000" || key == "1100";
        CHECK(supported);
        total += count;
    }
    CHECK(total == 2048);
    CHECK(result.success_rate >= 0.70);
    REQUIRE(result.factors.has_value());
    CHECK((*result.factors)[0] == 3);
    CHECK((*result.factors)[1] == 5);

    const shor::ShorResult repeat = shor::shor_factor(15, 7, 2048, 1);
    CHECK(repeat.histogram.counts == result.histogram.counts);
    CHECK(repeat.success_rate == result.success_rate);
}
