#pragma once

/// @file adders.hpp
/// Netlist generators: the two-Peres full adder, the ripple chain built
/// from it, carry-skip blocks and the fixed- and variable-block adders
/// assembled from them.
///
/// All generators use the same adder interface: primary inputs
/// A_1..A_N, B_1..B_N, Cin with A_1 the most significant bit, primary
/// outputs S_1..S_N, Cout.  Marks label the signals the delay model
/// reasons about: P_<i> (bit propagate, A_i XOR B_i), and per block
/// Cin_copy, C_ripple (the carry leaving the block's ripple chain) and
/// P_block (the AND of the block's propagate signals).

#include <vector>

#include "revskip/netlist.hpp"

namespace revskip {

/// Block decomposition of an adder: block_sizes[0] is the least
/// significant block.
struct BlockPlan {
    enum class Style { Fixed, Variable };
    Style style = Style::Fixed;
    long long total_bits = 0;
    std::vector<int> block_sizes;
    bool operator==(const BlockPlan&) const = default;
};

/// Uniform plan of bits / block_bits blocks.  Throws std::invalid_argument
/// unless block_bits divides bits.
BlockPlan fixed_plan(long long bits, int block_bits);

/// Variable plan with the staircase profile: both end blocks take the
/// base width floor(bits/t - t/4 + 1/2) and widths step up by one per
/// block toward the middle.  Leftover bits are distributed middle-out,
/// one per block, starting with the later middle block.  Throws
/// std::invalid_argument when the block count is odd, exceeds bits, or
/// leaves no room for one-bit end blocks.
BlockPlan block_plan(long long bits, int block_count);

/// One-bit full adder from two Peres gates; marks the propagate line P.
Netlist peres_full_adder();

/// N-bit ripple adder: a chain of the two-Peres full adders.
Netlist ripple_adder(int bits);

/// Balanced AND reduction of `leaves` operands onto fresh constant
/// lines: leaves-1 peres gates, depth ceil(log2 leaves).  The result
/// line is marked and output as P_block.
Netlist and_tree(int leaves);

/// One carry-skip block: carry-in copy, ripple chain, propagate AND
/// tree and the fredkin carry mux.
Netlist carry_skip_block(int block_bits);

/// N-bit adder from uniform B-bit carry-skip blocks.
Netlist fixed_block_adder(int bits, int block_bits);

/// N-bit adder from the variable staircase profile with block_count blocks.
Netlist variable_block_adder(int bits, int block_count);

/// Adder built from an explicit block decomposition.
Netlist blocked_adder(const BlockPlan& plan);

/// Gate budget of one carry-skip block.  The published estimate charges
/// 3B Peres-equivalents; the built structure is 3B-1 peres plus the
/// carry-copy feynman and the skip fredkin.
struct SkipBlockBudget {
    int published_peres = 0;
    int peres = 0;
    int fredkin = 0;
    int feynman = 0;
    int total = 0;
    bool operator==(const SkipBlockBudget&) const = default;
};

SkipBlockBudget skip_block_budget(int block_bits);

}  // namespace revskip
