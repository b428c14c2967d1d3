// Acceptance gate: one check per release criterion, one line per result.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "revskip/adders.hpp"
#include "revskip/bounds.hpp"
#include "revskip/cli.hpp"
#include "revskip/delay.hpp"
#include "revskip/netlist.hpp"

using namespace revskip;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string two(double v) { return format_fixed2(v); }

int count_kind(const Metrics& m, const std::string& kind) {
    const auto it = m.gate_count_by_kind.find(kind);
    return it == m.gate_count_by_kind.end() ? 0 : it->second;
}

FunctionTable full_adder_table() {
    FunctionTable table;
    table.input_count = 3;
    table.output_count = 2;
    for (std::uint32_t w = 0; w < 8; ++w) {
        const std::uint32_t sum = (w >> 2) + ((w >> 1) & 1) + (w & 1);
        table.rows.push_back(((sum & 1) << 1) | (sum >> 1));
    }
    return table;
}

void check_table3() {
    const std::vector<long long> sizes = {4,   8,   16,   32,   64,  128,
                                          256, 512, 1024, 2048, 4096};
    const std::vector<double> reference = {4.93,   9.80,   17.86,  31.60,  55.71, 99.19,
                                           179.43, 330.38, 618.85, 1176.77, 2265.70};
    std::string arg;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) arg.push_back(',');
        arg += std::to_string(sizes[i]);
    }

    const auto start = std::chrono::steady_clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"table3", "--sizes", arg, "--format", "csv"}, out, err);
    const double elapsed = seconds_since(start);

    bool pass = code == 0 && elapsed < 1.0;
    double worst = 0;
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    pass = pass && line == "N,T_fixed_peres";
    for (std::size_t i = 0; i < sizes.size() && pass; ++i) {
        if (!std::getline(lines, line)) {
            pass = false;
            break;
        }
        const std::size_t comma = line.find(',');
        pass = pass && comma != std::string::npos &&
               line.substr(0, comma) == std::to_string(sizes[i]);
        if (!pass) break;
        const double value = std::stod(line.substr(comma + 1));
        const double delta = std::fabs(value - reference[i]);
        worst = std::max(worst, delta);
        pass = delta <= 0.01;
    }
    criterion(1, "table3 reference row values", pass,
              "11 rows, max |delta| = " + two(worst) + ", " + two(elapsed) + " s");
}

void check_full_adder_census() {
    const Metrics m = metrics(peres_full_adder());
    const bool pass = m.gate_count == 2 && m.garbage_outputs == 2 && m.constant_inputs == 1 &&
                      m.quantum_cost == 8;
    criterion(2, "full adder gate census", pass,
              "gates=" + std::to_string(m.gate_count) +
                  " garbage=" + std::to_string(m.garbage_outputs) +
                  " constants=" + std::to_string(m.constant_inputs) + " qcost=" +
                  (m.quantum_cost ? std::to_string(*m.quantum_cost) : std::string("unknown")));
}

void check_full_adder_depth() {
    const Metrics m = metrics(peres_full_adder());
    const bool costs = m.classical_cost && *m.classical_cost == ClassicalCost{4, 2, 0};
    const bool pass = m.depth == 2 && costs;
    std::string detail = "depth=" + std::to_string(m.depth);
    if (m.classical_cost) {
        detail += " xor=" + std::to_string(m.classical_cost->xor_count) +
                  " and=" + std::to_string(m.classical_cost->and_count) +
                  " not=" + std::to_string(m.classical_cost->not_count);
    }
    criterion(3, "full adder depth and classical cost", pass, detail);
}

void check_equivalence_suites() {
    struct Suite {
        const char* name;
        Netlist netlist;
        int bits;
        long long cases;
    };
    std::vector<Suite> suites;
    suites.push_back({"fulladder", peres_full_adder(), 1, 8});
    suites.push_back({"ripple(8)", ripple_adder(8), 8, 1ll << 17});
    suites.push_back({"skip-block(4)", carry_skip_block(4), 4, 1ll << 9});
    suites.push_back({"fixed(8,4)", fixed_block_adder(8, 4), 8, 1ll << 17});

    bool pass = true;
    std::string detail;
    for (const Suite& suite : suites) {
        const auto start = std::chrono::steady_clock::now();
        const EquivalenceResult res =
            check_adder_equivalence(suite.netlist, suite.bits, EquivalenceMode::exhaustive());
        const double elapsed = seconds_since(start);
        const bool ok = res.pass && res.cases_checked == suite.cases && elapsed < 10.0;
        pass = pass && ok;
        if (!detail.empty()) detail += ", ";
        detail += std::string(suite.name) + " " + std::to_string(res.cases_checked) +
                  " cases in " + two(elapsed) + " s";
        if (!ok && !res.pass) detail += " counterexample=" + res.counterexample;
    }
    criterion(4, "exhaustive adder equivalence", pass, detail);
}

void check_skip_timing() {
    bool pass = true;
    std::string detail;
    for (int b : {2, 4, 8}) {
        const Netlist block = carry_skip_block(b);
        const ArrivalMap arrivals = arrival_times(block);
        const auto ripple_idx = block.find_mark("C_ripple");
        const auto p_idx = block.find_mark("P_block");
        if (!ripple_idx || !p_idx) {
            pass = false;
            continue;
        }
        const int ripple_arrival = arrivals.mark_time[*ripple_idx];
        const int skip_arrival = arrivals.mark_time[*p_idx] + 1;
        const bool ok = ripple_arrival == b + 1 && skip_arrival == ceil_log2(b) + 3;
        pass = pass && ok;
        if (!detail.empty()) detail += ", ";
        detail += "B=" + std::to_string(b) + ": ripple " + std::to_string(ripple_arrival) +
                  ", skip " + std::to_string(skip_arrival);
    }
    criterion(5, "skip-block arrival times", pass, detail);
}

void check_gate_counts() {
    bool pass = true;
    std::string failure;
    for (int b = 2; b <= 16; ++b) {
        const Metrics tree = metrics(and_tree(b));
        if (tree.gate_count != b - 1) {
            pass = false;
            failure = "and_tree(" + std::to_string(b) + ") has " +
                      std::to_string(tree.gate_count) + " gates";
            break;
        }
        const Metrics block = metrics(carry_skip_block(b));
        const bool ok = count_kind(block, "peres") == 3 * b - 1 &&
                        count_kind(block, "fredkin") == 1 &&
                        count_kind(block, "feynman") == 1 &&
                        block.gate_count == 3 * b + 1;
        if (!ok) {
            pass = false;
            failure = "skip block " + std::to_string(b) + ": peres " +
                      std::to_string(count_kind(block, "peres")) + ", total " +
                      std::to_string(block.gate_count);
            break;
        }
    }
    criterion(6, "gate-count claims", pass,
              pass ? "and_tree B-1 and skip-block 3B-1 peres + fredkin + feynman for B in 2..16"
                   : failure);
}

void check_bounds_theorem() {
    const FunctionTable table = full_adder_table();
    const BoundsReport bounds = analyze_bounds(table);
    const RealizationCheck check = verify_realization(table, peres_full_adder());
    const bool pass = bounds.max_multiplicity == 3 && bounds.min_garbage == 2 &&
                      bounds.min_constant_inputs == 1 && check.pass &&
                      check.garbage_outputs == bounds.min_garbage &&
                      check.constant_inputs == bounds.min_constant_inputs;
    criterion(7, "full-adder lower bounds", pass,
              "mu=" + std::to_string(bounds.max_multiplicity) +
                  " min_garbage=" + std::to_string(bounds.min_garbage) +
                  " min_constants=" + std::to_string(bounds.min_constant_inputs) +
                  ", realization garbage=" + std::to_string(check.garbage_outputs) +
                  " constants=" + std::to_string(check.constant_inputs) +
                  (check.pass ? "" : ", " + check.reason));
}

void check_formula_consistency() {
    bool pass = true;
    std::string failure;

    // Collected form of the variable delay against the direct form.
    for (double n : {24.0, 48.0, 96.0, 1024.0}) {
        for (double t = 2; t <= 64 && pass; t += 2) {
            const double direct = variable_delay(n, t, DelayForm::Approx);
            const double collected = collected_variable_delay(t, variable_base_width(n, t));
            if (std::fabs(direct - collected) > 1e-9) {
                pass = false;
                failure = "collected form differs at N=" + two(n) + " t=" + two(t);
            }
        }
    }

    // The approximation is exact where ceil(log2 B) = B/2.
    for (double n : {24.0, 48.0, 96.0, 1024.0}) {
        for (double b : {2.0, 4.0}) {
            if (!pass) break;
            const double exact = fixed_delay(n, b, DelayForm::Exact);
            const double approx = fixed_delay(n, b, DelayForm::Approx);
            if (std::fabs(exact - approx) > 1e-9) {
                pass = false;
                failure = "exact and approx differ at N=" + two(n) + " B=" + two(b);
            }
        }
    }

    // The closed-form optimum is the approximate delay at sqrt(3N).
    Lcg64 rng(42);
    for (int i = 0; i < 100 && pass; ++i) {
        const double n = 4 + static_cast<double>(rng.next_word(12));
        const double at_opt = fixed_delay(n, std::sqrt(3 * n), DelayForm::Approx);
        if (std::fabs(at_opt - optimal_fixed_delay(n)) > 1e-9) {
            pass = false;
            failure = "optimum mismatch at N=" + two(n);
        }
    }

    criterion(8, "closed-form consistency", pass,
              pass ? "collected = direct, approx exact at B in {2,4}, optimum on 100 widths"
                   : failure);
}

void check_optimum_discrepancy() {
    bool pass = true;
    std::string failure;
    for (double n : {12.0, 48.0, 300.0}) {
        const VariableOptimum opt = variable_optimum(n);
        const double gap = opt.consistent_delay - opt.published_delay;
        if (std::fabs(gap - 2 * std::sqrt(3.0) * std::sqrt(n)) > 1e-9) {
            pass = false;
            failure = "gap mismatch at N=" + two(n);
            break;
        }

        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli({"optimize", "--bits", std::to_string(static_cast<long long>(n)),
                                  "--family", "variable"},
                                 out, err);
        const std::string text = out.str();
        const bool printed =
            code == 0 &&
            text.find("T_variable_opt_consistent=" + two(opt.consistent_delay)) !=
                std::string::npos &&
            text.find("T_variable_opt_published=" + two(opt.published_delay)) !=
                std::string::npos &&
            text.find("flag:") != std::string::npos;
        if (!printed) {
            pass = false;
            failure = "optimize output incomplete at N=" + two(n);
            break;
        }
    }
    criterion(9, "variable-optimum discrepancy", pass,
              pass ? "gap = 2 sqrt(3) sqrt(N) and both closed forms printed with the flag"
                   : failure);
}

void check_discrete_optimum() {
    bool pass = true;
    std::string detail;
    for (long long n : {16ll, 64ll, 256ll}) {
        const ScanResult scan = discrete_optimize(n, AdderFamily::Fixed);
        const double analytic = optimal_fixed_block(static_cast<double>(n));
        const long long rounded = std::llround(analytic);
        const double at_rounded =
            fixed_delay(static_cast<double>(n), static_cast<double>(rounded), DelayForm::Exact);
        const bool near = std::fabs(static_cast<double>(scan.parameter) - analytic) <= 3.0;
        const bool no_worse = scan.delay <= at_rounded + 1e-9;
        pass = pass && near && no_worse;
        if (!detail.empty()) detail += ", ";
        detail += "N=" + std::to_string(n) + ": B=" + std::to_string(scan.parameter) +
                  " vs sqrt(3N)=" + two(analytic) + " delay " + two(scan.delay) + " vs " +
                  two(at_rounded) + " at B=" + std::to_string(rounded);
        if (!near) detail += " [off by more than 3]";
        if (!no_worse) detail += " [worse than the rounded optimum]";
    }
    criterion(10, "discrete versus analytic optimum", pass, detail);
}

}  // namespace

int main() {
    check_table3();
    check_full_adder_census();
    check_full_adder_depth();
    check_equivalence_suites();
    check_skip_timing();
    check_gate_counts();
    check_bounds_theorem();
    check_formula_consistency();
    check_optimum_discrepancy();
    check_discrete_optimum();
    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures;
}
