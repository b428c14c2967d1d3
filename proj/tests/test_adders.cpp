#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "revskip/adders.hpp"
#include "revskip/netlist.hpp"

using namespace revskip;

TEST_CASE("full adder structure") {
    const Metrics m = metrics(peres_full_adder());
    CHECK(m.gate_count == 2);
    CHECK(m.gate_count_by_kind == std::map<std::string, int>{{"peres", 2}});
    CHECK(m.quantum_cost == 8);
    CHECK(m.classical_cost == ClassicalCost{4, 2, 0});
    CHECK(m.constant_inputs == 1);
    CHECK(m.garbage_outputs == 2);
    CHECK(m.depth == 2);
    CHECK(m.width == 4);
}

TEST_CASE("full adder adds") {
    CHECK(check_adder_equivalence(peres_full_adder(), 1, EquivalenceMode::exhaustive()).pass);
    // The one-bit ripple adder is the same circuit up to signal names.
    const Netlist one = ripple_adder(1);
    CHECK(truth_table(one) == truth_table(peres_full_adder()));
    CHECK(metrics(one).gate_count == 2);
    REQUIRE(one.find_mark("P_1").has_value());
}

TEST_CASE("ripple adder carries arrive one stage apart") {
    const int bits = 4;
    const Netlist nl = ripple_adder(bits);
    const ArrivalMap arrivals = arrival_times(nl);
    // Propagate signals settle at 2; the carry leaves stage i at i + 1.
    for (int i = 1; i <= bits; ++i) {
        const auto idx = nl.find_mark("P_" + std::to_string(i));
        REQUIRE(idx.has_value());
        CHECK(arrivals.mark_time[*idx] == 2);
    }
    CHECK(arrivals.depth == bits + 1);
    const int cout_line = nl.output_lines().back();
    CHECK(arrivals.line_time[static_cast<std::size_t>(cout_line)] == bits + 1);
}

TEST_CASE("ripple adder is exhaustively correct") {
    for (int bits : {1, 2, 3, 8}) {
        CAPTURE(bits);
        const EquivalenceResult res =
            check_adder_equivalence(ripple_adder(bits), bits, EquivalenceMode::exhaustive());
        CHECK(res.pass);
        CHECK(res.cases_checked == (1ll << (2 * bits + 1)));
    }
}

TEST_CASE("and tree reduces in logarithmic depth") {
    for (int leaves = 1; leaves <= 16; ++leaves) {
        CAPTURE(leaves);
        const Netlist nl = and_tree(leaves);
        const Metrics m = metrics(nl);
        CHECK(m.gate_count == leaves - 1);
        if (leaves > 1) CHECK(m.gate_count_by_kind.at("peres") == leaves - 1);

        int expected_depth = 0;
        while ((1 << expected_depth) < leaves) ++expected_depth;
        const ArrivalMap arrivals = arrival_times(nl);
        const auto idx = nl.find_mark("P_block");
        REQUIRE(idx.has_value());
        CHECK(arrivals.mark_time[*idx] == expected_depth);

        // Output 0 is the conjunction: one iff the input is all ones.
        const auto table = truth_table(nl);
        for (std::uint64_t w = 0; w < table.size(); ++w) {
            const int conj = static_cast<int>(table[w] >> (m.primary_outputs - 1));
            CHECK(conj == (w + 1 == table.size() ? 1 : 0));
        }
    }
}

TEST_CASE("carry-skip block census") {
    const Netlist block = carry_skip_block(4);
    const Metrics m = metrics(block);
    CHECK(m.gate_count == 13);
    CHECK(m.gate_count_by_kind ==
          std::map<std::string, int>{{"feynman", 1}, {"fredkin", 1}, {"peres", 11}});
    CHECK(m.quantum_cost == 50);
    CHECK(m.classical_cost == ClassicalCost{25, 15, 1});
    CHECK(m.constant_inputs == 8);
    CHECK(m.garbage_outputs == 12);
    CHECK(m.primary_inputs == 9);
    CHECK(m.primary_outputs == 5);
    CHECK(m.width == 17);

    CHECK(skip_block_budget(4) == SkipBlockBudget{12, 11, 1, 1, 13});
    CHECK(skip_block_budget(1) == SkipBlockBudget{3, 2, 1, 1, 4});
    for (int b : {1, 2, 3, 5, 8}) {
        CAPTURE(b);
        const SkipBlockBudget budget = skip_block_budget(b);
        CHECK(budget.total == 3 * b + 1);
        CHECK(budget.total == budget.published_peres + 1);
        CHECK(metrics(carry_skip_block(b)).gate_count == budget.total);
    }
}

TEST_CASE("carry-skip block adds and marks the skip signals") {
    for (int bits : {1, 2, 3, 4}) {
        CAPTURE(bits);
        const Netlist block = carry_skip_block(bits);
        CHECK(check_adder_equivalence(block, bits, EquivalenceMode::exhaustive()).pass);

        // When every bit propagates, the rippled carry already equals the
        // carry-in, so the fredkin swap never changes the carry value.
        std::vector<std::size_t> p_idx;
        for (int i = 1; i <= bits; ++i) {
            const auto idx = block.find_mark("P_" + std::to_string(i));
            REQUIRE(idx.has_value());
            p_idx.push_back(*idx);
        }
        const auto ripple_idx = block.find_mark("C_ripple");
        REQUIRE(ripple_idx.has_value());

        const int inputs = 2 * bits + 1;
        for (std::uint64_t w = 0; w < (1ull << inputs); ++w) {
            std::vector<int> assignment;
            for (int i = inputs - 1; i >= 0; --i) {
                assignment.push_back(static_cast<int>((w >> i) & 1));
            }
            const SimulationResult sim = simulate(block, assignment);
            bool all_propagate = true;
            for (std::size_t idx : p_idx) all_propagate &= sim.mark_values[idx] == 1;
            if (all_propagate) {
                CHECK(sim.mark_values[*ripple_idx] == static_cast<int>(w & 1));
            }
        }
    }
}

TEST_CASE("skip timing invariants") {
    const Netlist block = carry_skip_block(8);
    const ArrivalMap arrivals = arrival_times(block);
    // The block's rippled carry needs B + 1 units, the propagate
    // conjunction ceil(log2 B) + 2.
    CHECK(arrivals.mark_time[*block.find_mark("C_ripple")] == 9);
    CHECK(arrivals.mark_time[*block.find_mark("P_block")] == 5);
    CHECK(arrivals.mark_time[*block.find_mark("Cin_copy")] == 1);
}

TEST_CASE("fixed plan") {
    CHECK(fixed_plan(16, 4).block_sizes == std::vector<int>(4, 4));
    CHECK(fixed_plan(16, 4).style == BlockPlan::Style::Fixed);
    CHECK(fixed_plan(16, 4).total_bits == 16);
    CHECK_THROWS_AS(fixed_plan(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(fixed_plan(16, 0), std::invalid_argument);
    CHECK_THROWS_AS(fixed_plan(0, 4), std::invalid_argument);
}

TEST_CASE("variable staircase plans") {
    CHECK(block_plan(18, 4).block_sizes == std::vector<int>{4, 5, 5, 4});
    CHECK(block_plan(44, 8).block_sizes == std::vector<int>{4, 5, 6, 7, 7, 6, 5, 4});
    CHECK(block_plan(4, 2).block_sizes == std::vector<int>{2, 2});
    // Leftover bits go middle-out, the later middle block first.
    CHECK(block_plan(19, 4).block_sizes == std::vector<int>{4, 5, 6, 4});
    CHECK(block_plan(20, 4).block_sizes == std::vector<int>{4, 6, 6, 4});
    CHECK(block_plan(64, 8).block_sizes == std::vector<int>{6, 7, 9, 10, 10, 9, 7, 6});
    CHECK(block_plan(18, 4).style == BlockPlan::Style::Variable);

    for (long long bits : {4ll, 18ll, 19ll, 20ll, 37ll, 64ll, 100ll, 256ll}) {
        for (int t = 2; t <= 8; t += 2) {
            if (bits < t) continue;
            CAPTURE(bits);
            CAPTURE(t);
            BlockPlan plan;
            try {
                plan = block_plan(bits, t);
            } catch (const std::invalid_argument&) {
                continue;  // infeasible profile, checked separately
            }
            long long sum = 0;
            for (int s : plan.block_sizes) {
                CHECK(s >= 1);
                sum += s;
            }
            CHECK(sum == bits);
            CHECK(static_cast<int>(plan.block_sizes.size()) == t);
            // Widths rise toward the middle, then fall: the profile is
            // unimodal, and mirror blocks differ by at most one bit
            // (the leftover distribution favors the later middle side).
            const std::size_t peak = static_cast<std::size_t>(
                std::max_element(plan.block_sizes.begin(), plan.block_sizes.end()) -
                plan.block_sizes.begin());
            for (std::size_t j = 0; j + 1 < plan.block_sizes.size(); ++j) {
                if (j < peak) {
                    CHECK(plan.block_sizes[j] <= plan.block_sizes[j + 1]);
                } else {
                    CHECK(plan.block_sizes[j] >= plan.block_sizes[j + 1]);
                }
            }
            for (std::size_t j = 0; j < plan.block_sizes.size() / 2; ++j) {
                const int mirror = plan.block_sizes[plan.block_sizes.size() - 1 - j];
                CHECK(std::abs(plan.block_sizes[j] - mirror) <= 1);
            }
        }
    }
}

TEST_CASE("variable plan rejections") {
    CHECK_THROWS_WITH_AS(block_plan(10, 3), "block count must be a positive even number",
                         std::invalid_argument);
    CHECK_THROWS_AS(block_plan(10, 0), std::invalid_argument);
    CHECK_THROWS_WITH_AS(block_plan(3, 4), "total bits must be at least the block count",
                         std::invalid_argument);
    // Four one-bit blocks would need base width 0.5: no staircase fits.
    CHECK_THROWS_AS(block_plan(4, 4), std::invalid_argument);
}

TEST_CASE("fixed-block adder") {
    const Netlist adder = fixed_block_adder(8, 4);
    CHECK(metrics(adder).gate_count == 26);
    CHECK(check_adder_equivalence(adder, 8, EquivalenceMode::exhaustive()).pass);

    // A single block needs no disambiguating suffix: the adder and the
    // bare block are the same netlist.
    CHECK(fixed_block_adder(4, 4) == carry_skip_block(4));

    // Block marks carry global bit numbers and block suffixes.
    CHECK(adder.find_mark("P_1").has_value());
    CHECK(adder.find_mark("P_8").has_value());
    CHECK(adder.find_mark("C_ripple_b0").has_value());
    CHECK(adder.find_mark("P_block_b1").has_value());
    CHECK_FALSE(adder.find_mark("C_ripple").has_value());
}

TEST_CASE("variable-block adder") {
    const Netlist adder = variable_block_adder(18, 4);
    CHECK(metrics(adder).gate_count == 58);  // sum of 3B+1 over blocks 4,5,5,4
    const EquivalenceResult res =
        check_adder_equivalence(adder, 18, EquivalenceMode::random(10000, 42));
    CHECK(res.pass);
    CHECK(res.cases_checked == 10000);

    // Same plan, same circuit: a 4-bit two-block profile is uniform.
    CHECK(variable_block_adder(4, 2) == fixed_block_adder(4, 2));
}

TEST_CASE("wide adders stay correct") {
    const Netlist adder = variable_block_adder(64, 8);
    const EquivalenceResult res =
        check_adder_equivalence(adder, 64, EquivalenceMode::random(10000, 42));
    CHECK(res.pass);
    CHECK(check_adder_equivalence(fixed_block_adder(64, 4), 64,
                                  EquivalenceMode::random(10000, 7))
              .pass);
}

TEST_CASE("blocked adder rejects inconsistent plans") {
    BlockPlan plan;
    plan.total_bits = 8;
    plan.block_sizes = {4, 3};
    CHECK_THROWS_AS(blocked_adder(plan), std::invalid_argument);
    plan.block_sizes = {4, 4, 0};
    CHECK_THROWS_AS(blocked_adder(plan), std::invalid_argument);
    CHECK_THROWS_AS(ripple_adder(0), std::invalid_argument);
    CHECK_THROWS_AS(ripple_adder(-3), std::invalid_argument);
    CHECK_THROWS_AS(and_tree(0), std::invalid_argument);
}
