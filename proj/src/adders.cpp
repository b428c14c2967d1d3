#include "revskip/adders.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace revskip {

namespace {

constexpr long long kMaxAdderBits = 1 << 16;

void check_bits(long long bits) {
    if (bits < 1) throw std::invalid_argument("adder width must be positive");
    if (bits > kMaxAdderBits) {
        throw std::invalid_argument("adder width exceeds limit of " +
                                    std::to_string(kMaxAdderBits));
    }
}

struct RippleSection {
    std::vector<int> sum_lines;  // sum_lines[i] carries S_{first+i}
    std::vector<int> p_lines;    // p_lines[i] carries the propagate of that bit
    int carry_out = 0;
};

/// Chains one two-Peres full adder per bit, least significant bit (the
/// highest index) first.  first_bit is the 1-based number of a[0] in the
/// whole adder, used for the P_<n> mark labels.
RippleSection append_ripple(NetlistBuilder& nb, const std::vector<int>& a,
                            const std::vector<int>& b, int carry_in, long long first_bit) {
    const Gate peres = make_named_gate("peres");
    RippleSection sec;
    sec.sum_lines.resize(a.size());
    sec.p_lines.resize(a.size());
    int carry = carry_in;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        const int t = nb.add_constant(0);
        nb.apply(peres, {a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)], t});
        nb.apply(peres, {b[static_cast<std::size_t>(i)], carry, t});
        nb.mark(b[static_cast<std::size_t>(i)], "P_" + std::to_string(first_bit + i));
        sec.sum_lines[static_cast<std::size_t>(i)] = carry;
        sec.p_lines[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)];
        carry = t;
    }
    sec.carry_out = carry;
    return sec;
}

/// Balanced pairwise AND via peres gates onto fresh constant lines (the
/// R port yields AB); the odd operand of a level joins the end of the
/// next level.  Returns the line holding the conjunction and appends
/// every created line to `created`.
int reduce_and(NetlistBuilder& nb, std::vector<int> operands, std::vector<int>& created) {
    const Gate peres = make_named_gate("peres");
    while (operands.size() > 1) {
        std::vector<int> next;
        std::size_t i = 0;
        for (; i + 1 < operands.size(); i += 2) {
            const int t = nb.add_constant(0);
            nb.apply(peres, {operands[i], operands[i + 1], t});
            created.push_back(t);
            next.push_back(t);
        }
        if (i < operands.size()) next.push_back(operands[i]);
        operands = std::move(next);
    }
    return operands[0];
}

struct SkipBlockSection {
    std::vector<int> sum_lines;
    int carry_out = 0;
    std::vector<int> garbage;  // a lines, p lines, carry copy, tree lines
};

/// Appends one carry-skip block: duplicate the carry-in, ripple through
/// the block, AND the propagate signals, then fredkin-select between the
/// rippled carry and the saved carry-in.  The block carry-out stays on
/// the ripple chain's carry line.
SkipBlockSection append_skip_block(NetlistBuilder& nb, const std::vector<int>& a,
                                   const std::vector<int>& b, int carry_in,
                                   long long first_bit, const std::string& mark_suffix) {
    const Gate feynman = make_named_gate("feynman");
    const Gate fredkin = make_named_gate("fredkin");

    const int carry_copy = nb.add_constant(0);
    nb.apply(feynman, {carry_in, carry_copy});
    nb.mark(carry_copy, "Cin_copy" + mark_suffix);

    RippleSection ripple = append_ripple(nb, a, b, carry_in, first_bit);
    nb.mark(ripple.carry_out, "C_ripple" + mark_suffix);

    std::vector<int> tree_lines;
    const int p_all = reduce_and(nb, ripple.p_lines, tree_lines);
    nb.mark(p_all, "P_block" + mark_suffix);

    nb.apply(fredkin, {p_all, ripple.carry_out, carry_copy});

    SkipBlockSection sec;
    sec.sum_lines = std::move(ripple.sum_lines);
    sec.carry_out = ripple.carry_out;
    sec.garbage = a;
    sec.garbage.insert(sec.garbage.end(), ripple.p_lines.begin(), ripple.p_lines.end());
    sec.garbage.push_back(carry_copy);
    sec.garbage.insert(sec.garbage.end(), tree_lines.begin(), tree_lines.end());
    return sec;
}

struct AdderInputs {
    std::vector<int> a;
    std::vector<int> b;
    int cin = 0;
};

AdderInputs declare_adder_inputs(NetlistBuilder& nb, long long bits) {
    AdderInputs in;
    for (long long i = 1; i <= bits; ++i) in.a.push_back(nb.add_input("A_" + std::to_string(i)));
    for (long long i = 1; i <= bits; ++i) in.b.push_back(nb.add_input("B_" + std::to_string(i)));
    in.cin = nb.add_input("Cin");
    return in;
}

void declare_adder_outputs(NetlistBuilder& nb, const std::vector<int>& sum_lines, int carry_out,
                           const std::vector<int>& garbage) {
    for (std::size_t i = 0; i < sum_lines.size(); ++i) {
        nb.set_output(sum_lines[i], "S_" + std::to_string(i + 1));
    }
    nb.set_output(carry_out, "Cout");
    for (int line : garbage) nb.set_garbage(line);
}

}  // namespace

BlockPlan fixed_plan(long long bits, int block_bits) {
    check_bits(bits);
    if (block_bits < 1) throw std::invalid_argument("block width must be positive");
    if (bits % block_bits != 0) {
        throw std::invalid_argument("block width " + std::to_string(block_bits) +
                                    " does not divide " + std::to_string(bits) + " bits");
    }
    BlockPlan plan;
    plan.style = BlockPlan::Style::Fixed;
    plan.total_bits = bits;
    plan.block_sizes.assign(static_cast<std::size_t>(bits / block_bits), block_bits);
    return plan;
}

BlockPlan block_plan(long long bits, int block_count) {
    check_bits(bits);
    if (block_count < 2 || block_count % 2 != 0) {
        throw std::invalid_argument("block count must be a positive even number");
    }
    if (bits < block_count) {
        throw std::invalid_argument("total bits must be at least the block count");
    }
    const int t = block_count;
    const double ideal = static_cast<double>(bits) / t - t / 4.0 + 0.5;
    const long long base = static_cast<long long>(std::floor(ideal));
    if (base < 1) {
        throw std::invalid_argument("no feasible staircase profile: " + std::to_string(t) +
                                    " blocks over " + std::to_string(bits) +
                                    " bits leaves the end blocks below one bit");
    }

    std::vector<int> sizes(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        sizes[static_cast<std::size_t>(j)] = static_cast<int>(base) + std::min(j, t - 1 - j);
    }
    long long deficit =
        bits - std::accumulate(sizes.begin(), sizes.end(), 0LL);
    // The rounding shortfall is below t; hand one bit per block, middle
    // rings first, the later middle block before its mirror.
    for (int ring = 0; deficit > 0 && ring < t / 2; ++ring) {
        sizes[static_cast<std::size_t>(t / 2 + ring)] += 1;
        --deficit;
        if (deficit > 0) {
            sizes[static_cast<std::size_t>(t / 2 - 1 - ring)] += 1;
            --deficit;
        }
    }
    if (deficit != 0) throw std::logic_error("staircase distribution failed");

    BlockPlan plan;
    plan.style = BlockPlan::Style::Variable;
    plan.total_bits = bits;
    plan.block_sizes = std::move(sizes);
    return plan;
}

Netlist peres_full_adder() {
    NetlistBuilder nb;
    const Gate peres = make_named_gate("peres");
    const int a = nb.add_input("A");
    const int b = nb.add_input("B");
    const int cin = nb.add_input("Cin");
    const int t = nb.add_constant(0);
    nb.apply(peres, {a, b, t});
    nb.apply(peres, {b, cin, t});
    nb.mark(b, "P");
    nb.set_output(cin, "S");
    nb.set_output(t, "Cout");
    nb.set_garbage(a);
    nb.set_garbage(b);
    return nb.build();
}

Netlist ripple_adder(int bits) {
    check_bits(bits);
    NetlistBuilder nb;
    const AdderInputs in = declare_adder_inputs(nb, bits);
    const RippleSection sec = append_ripple(nb, in.a, in.b, in.cin, 1);
    std::vector<int> garbage = in.a;
    garbage.insert(garbage.end(), sec.p_lines.begin(), sec.p_lines.end());
    declare_adder_outputs(nb, sec.sum_lines, sec.carry_out, garbage);
    return nb.build();
}

Netlist and_tree(int leaves) {
    if (leaves < 1) throw std::invalid_argument("reduction needs at least one operand");
    if (leaves > kMaxAdderBits) {
        throw std::invalid_argument("reduction width exceeds limit of " +
                                    std::to_string(kMaxAdderBits));
    }
    NetlistBuilder nb;
    std::vector<int> operands;
    for (int i = 1; i <= leaves; ++i) operands.push_back(nb.add_input("P_" + std::to_string(i)));
    std::vector<int> created;
    const int result = reduce_and(nb, operands, created);
    nb.mark(result, "P_block");
    nb.set_output(result, "P_block");
    for (int line : operands) {
        if (line != result) nb.set_garbage(line);
    }
    for (int line : created) {
        if (line != result) nb.set_garbage(line);
    }
    return nb.build();
}

Netlist carry_skip_block(int block_bits) {
    check_bits(block_bits);
    NetlistBuilder nb;
    const AdderInputs in = declare_adder_inputs(nb, block_bits);
    const SkipBlockSection sec = append_skip_block(nb, in.a, in.b, in.cin, 1, "");
    declare_adder_outputs(nb, sec.sum_lines, sec.carry_out, sec.garbage);
    return nb.build();
}

Netlist blocked_adder(const BlockPlan& plan) {
    check_bits(plan.total_bits);
    const long long declared =
        std::accumulate(plan.block_sizes.begin(), plan.block_sizes.end(), 0LL);
    if (declared != plan.total_bits || plan.block_sizes.empty()) {
        throw std::invalid_argument("block sizes do not cover the adder width");
    }
    for (int size : plan.block_sizes) {
        if (size < 1) throw std::invalid_argument("block sizes must be positive");
    }

    const long long bits = plan.total_bits;
    NetlistBuilder nb;
    const AdderInputs in = declare_adder_inputs(nb, bits);

    std::vector<int> sum_lines(static_cast<std::size_t>(bits), 0);
    std::vector<int> garbage;
    int carry = in.cin;
    long long consumed = 0;
    const bool single_block = plan.block_sizes.size() == 1;
    for (std::size_t j = 0; j < plan.block_sizes.size(); ++j) {
        const int size = plan.block_sizes[j];
        const long long start = bits - consumed - size;  // blocks run LSB first
        const std::vector<int> a_slice(in.a.begin() + start, in.a.begin() + start + size);
        const std::vector<int> b_slice(in.b.begin() + start, in.b.begin() + start + size);
        const SkipBlockSection sec = append_skip_block(
            nb, a_slice, b_slice, carry, start + 1,
            single_block ? std::string() : "_b" + std::to_string(j));
        for (int i = 0; i < size; ++i) {
            sum_lines[static_cast<std::size_t>(start + i)] =
                sec.sum_lines[static_cast<std::size_t>(i)];
        }
        garbage.insert(garbage.end(), sec.garbage.begin(), sec.garbage.end());
        carry = sec.carry_out;
        consumed += size;
    }

    declare_adder_outputs(nb, sum_lines, carry, garbage);
    return nb.build();
}

Netlist fixed_block_adder(int bits, int block_bits) {
    return blocked_adder(fixed_plan(bits, block_bits));
}

Netlist variable_block_adder(int bits, int block_count) {
    return blocked_adder(block_plan(bits, block_count));
}

SkipBlockBudget skip_block_budget(int block_bits) {
    check_bits(block_bits);
    SkipBlockBudget budget;
    budget.published_peres = 3 * block_bits;
    budget.peres = 3 * block_bits - 1;
    budget.fredkin = 1;
    budget.feynman = 1;
    budget.total = budget.peres + budget.fredkin + budget.feynman;
    return budget;
}

}  // namespace revskip
