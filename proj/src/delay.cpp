#include "revskip/delay.hpp"

#include <cmath>
#include <stdexcept>

namespace revskip {

namespace {

void check_block(double block_bits) {
    if (!(block_bits >= 1)) {
        throw std::invalid_argument("block size must be at least 1");
    }
}

void check_bits(double bits) {
    if (!(bits >= 1)) {
        throw std::invalid_argument("adder width must be at least 1");
    }
}

void check_block_count(double block_count) {
    if (!(block_count >= 2) || std::fmod(block_count, 2.0) != 0.0) {
        throw std::invalid_argument("block count must be even and at least 2");
    }
}

}  // namespace

int ceil_log2(double x) {
    if (!(x >= 1)) {
        throw std::invalid_argument("ceil_log2 requires an argument of at least 1");
    }
    int k = 0;
    while (std::ldexp(1.0, k) < x) ++k;
    return k;
}

double ripple_delay(double block_bits) {
    check_block(block_bits);
    return block_bits + 1;
}

double skip_delay(double block_bits) {
    check_block(block_bits);
    return ceil_log2(block_bits) + 3;
}

double fixed_delay(double bits, double block_bits, DelayForm form) {
    check_bits(bits);
    check_block(block_bits);
    if (form == DelayForm::Approx) {
        return block_bits + bits / 2 + 3 * bits / block_bits - 4;
    }
    const double blocks = bits / block_bits;
    if (blocks < 2) {
        throw std::invalid_argument("exact fixed delay needs at least two blocks (N/B >= 2)");
    }
    return (block_bits + 1) + (blocks - 2) * (ceil_log2(block_bits) + 3) + (block_bits + 1);
}

double optimal_fixed_block(double bits) {
    check_bits(bits);
    return std::sqrt(3 * bits);
}

double optimal_fixed_delay(double bits) {
    check_bits(bits);
    return bits / 2 + 2 * std::sqrt(3.0) * std::sqrt(bits) - 4;
}

double variable_base_width(double bits, double block_count) {
    check_bits(bits);
    check_block_count(block_count);
    return bits / block_count - block_count / 4 + 0.5;
}

double variable_delay(double bits, double block_count, DelayForm form) {
    check_bits(bits);
    check_block_count(block_count);
    if (form == DelayForm::Approx) {
        return 9 * block_count / 4 - 2.5 + 3 * bits / block_count + bits / 2;
    }
    const double base = variable_base_width(bits, block_count);
    if (base < 1) {
        throw std::invalid_argument("exact variable delay needs a base width of at least 1");
    }
    // The carry ripples through both end blocks and skips each distinct
    // middle width once per side; fractional bases keep the real value
    // in the end-block term and floor only the summation bounds.
    const long long floored = static_cast<long long>(std::floor(base));
    double sum = 0;
    for (long long k = floored + 1; k <= floored + static_cast<long long>(block_count) / 2 - 1;
         ++k) {
        sum += ceil_log2(static_cast<double>(k)) + 3;
    }
    return 2 * (base + 1) + 2 * sum;
}

double collected_variable_delay(double block_count, double base_width) {
    check_block_count(block_count);
    return block_count * block_count / 8 + 11 * block_count / 4 + base_width * block_count / 2 +
           3 * base_width - 4;
}

double optimal_block_count(double bits) {
    check_bits(bits);
    return 2 * std::sqrt(bits / 3);
}

VariableOptimum variable_optimum(double bits) {
    check_bits(bits);
    VariableOptimum opt;
    opt.block_count = optimal_block_count(bits);
    opt.consistent_delay = bits / 2 + 3 * std::sqrt(3.0) * std::sqrt(bits) - 2.5;
    opt.published_delay = bits / 2 + std::sqrt(3.0) * std::sqrt(bits) - 2.5;
    return opt;
}

std::vector<TableRow> optimal_delay_table(const std::vector<double>& sizes) {
    std::vector<TableRow> rows;
    rows.reserve(sizes.size());
    for (double n : sizes) {
        rows.push_back({n, optimal_fixed_delay(n)});
    }
    return rows;
}

ScanResult discrete_optimize(long long bits, AdderFamily family) {
    if (bits < 4) {
        throw std::invalid_argument("discrete optimization requires at least 4 bits");
    }
    ScanResult best{0, 0};
    bool found = false;
    if (family == AdderFamily::Fixed) {
        for (long long b = 1; 2 * b <= bits; ++b) {
            const double d = fixed_delay(static_cast<double>(bits), static_cast<double>(b),
                                         DelayForm::Exact);
            if (!found || d < best.delay - 1e-9) {
                best = {b, d};
                found = true;
            }
        }
    } else {
        for (long long t = 2; t <= bits; t += 2) {
            const double base =
                variable_base_width(static_cast<double>(bits), static_cast<double>(t));
            if (base < 1) continue;
            const double d = variable_delay(static_cast<double>(bits), static_cast<double>(t),
                                            DelayForm::Exact);
            if (!found || d < best.delay - 1e-9) {
                best = {t, d};
                found = true;
            }
        }
    }
    if (!found) {
        throw std::invalid_argument("no feasible parameter in the scan domain");
    }
    return best;
}

std::string format_fixed2(double value) {
    long long cents = static_cast<long long>(std::floor(value * 100.0 + 0.5));
    const bool negative = cents < 0;
    if (negative) cents = -cents;
    std::string frac = std::to_string(cents % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    return (negative ? "-" : "") + std::to_string(cents / 100) + "." + frac;
}

}  // namespace revskip
