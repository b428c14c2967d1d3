#pragma once

/// @file delay.hpp
/// Closed-form unit-delay model for carry-skip adders built from the
/// two-Peres full adder, real-valued optima for fixed and variable
/// block sizing, and a discrete brute-force optimizer that serves as
/// the oracle for the closed forms.
///
/// The worst-case carry path enters the first block's ripple chain
/// (B + 1 units), hops across every middle block through its skip
/// circuitry (ceil(log2 B) + 3 units each) and ripples out of the last
/// block.  Approximate forms replace ceil(log2 B) by B/2.

#include <string>
#include <vector>

namespace revskip {

enum class DelayForm { Exact, Approx };

enum class AdderFamily { Fixed, Variable };

/// Smallest k >= 0 with 2^k >= x; requires x >= 1.
int ceil_log2(double x);

/// Carry delay through a B-bit ripple chain: B + 1.
double ripple_delay(double block_bits);

/// Carry delay across one skipped block: ceil(log2 B) + 3.
double skip_delay(double block_bits);

/// Worst-case delay of an N-bit adder with fixed B-bit blocks.
/// Exact: (B+1) + (N/B - 2)(ceil(log2 B) + 3) + (B+1), with N/B real;
/// requires N/B >= 2.  Approx: B + N/2 + 3N/B - 4.
double fixed_delay(double bits, double block_bits, DelayForm form);

/// Real minimizer of the approximate fixed delay: sqrt(3N).
double optimal_fixed_block(double bits);

/// Approximate fixed delay at its minimizer: N/2 + 2 sqrt(3) sqrt(N) - 4.
double optimal_fixed_delay(double bits);

/// End-block width of the variable staircase profile: N/t - t/4 + 1/2.
/// (Derived; the published form with a leading N/2 does not satisfy the
/// collected-delay identity.)
double variable_base_width(double bits, double block_count);

/// Worst-case delay of the variable staircase adder with t blocks.
/// Exact: 2(b+1) + 2 sum_{k=b+1}^{b+t/2-1} (ceil(log2 k) + 3), where
/// the summation bounds use floor(b); requires b >= 1.
/// Approx: 9t/4 - 5/2 + 3N/t + N/2.
double variable_delay(double bits, double block_count, DelayForm form);

/// The collected form of the variable delay in t and the base width b:
/// t^2/8 + 11t/4 + bt/2 + 3b - 4.  Substituting b = variable_base_width
/// reproduces the approximate variable delay exactly.
double collected_variable_delay(double block_count, double base_width);

/// Real minimizer of the approximate variable delay: 2 sqrt(N/3).
double optimal_block_count(double bits);

/// Both closed forms for the variable-profile optimum.  Evaluating the
/// approximate delay at the optimal block count gives
/// N/2 + 3 sqrt(3) sqrt(N) - 5/2; the published closed form is
/// N/2 + sqrt(3) sqrt(N) - 5/2.  They differ by 2 sqrt(3) sqrt(N).
struct VariableOptimum {
    double block_count = 0;
    double consistent_delay = 0;
    double published_delay = 0;
};

VariableOptimum variable_optimum(double bits);

/// One row of the optimal fixed-delay table.
struct TableRow {
    double bits = 0;
    double delay = 0;
};

/// (N, optimal_fixed_delay(N)) for each requested size.
std::vector<TableRow> optimal_delay_table(const std::vector<double>& sizes);

/// Result of a discrete parameter scan.
struct ScanResult {
    long long parameter = 0;  // block size (fixed) or block count (variable)
    double delay = 0;
};

/// Brute-force minimizer of the exact delay over integer parameters:
/// fixed scans every B with N/B >= 2, variable scans every even t with
/// base width >= 1.  Ties break toward the smaller parameter.
/// Requires bits >= 4.
ScanResult discrete_optimize(long long bits, AdderFamily family);

/// Named value with optional documented-discrepancy notices, the shape
/// the delay and optimize commands print.
struct DelayValue {
    std::string name;
    double value = 0;
};

struct DelayReport {
    std::vector<DelayValue> values;
    std::vector<std::string> flags;
};

/// Two-decimal display with round-half-up, e.g. 2265.695 -> "2265.70".
std::string format_fixed2(double value);

}  // namespace revskip
