#pragma once

/// @file bounds.hpp
/// Lower bounds for reversible realizations of irreversible functions:
/// a function whose most-repeated output word occurs mu times needs at
/// least ceil(log2 mu) garbage outputs to separate those inputs, and
/// enough constant inputs to balance the line count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "revskip/netlist.hpp"

namespace revskip {

/// Complete truth table of a (possibly irreversible) Boolean function.
/// rows[w] is the output word for input word w, first input/output as MSB.
struct FunctionTable {
    int input_count = 0;
    int output_count = 0;
    std::vector<std::uint32_t> rows;

    /// Throws std::invalid_argument unless the table is complete and
    /// every output word fits the declared arity.
    void validate() const;
};

/// Parses the ftab text format: a `ftab <n_in> <n_out>` header, then one
/// `<inbits> <outbits>` row per input word (any order, each exactly
/// once).  `#` starts a comment.  Throws ParseError.
FunctionTable parse_function_table(std::string_view text);

/// The counting bounds for one function.
struct BoundsReport {
    long long max_multiplicity = 0;  // mu
    int min_garbage = 0;             // ceil(log2 mu)
    int min_constant_inputs = 0;     // max(0, n_out + min_garbage - n_in)
    int total_outputs = 0;           // n_out + min_garbage
};

BoundsReport analyze_bounds(const FunctionTable& table);

/// Outcome of checking a netlist against a table and its bounds.
struct RealizationCheck {
    bool pass = true;
    std::string reason;  // empty on pass
    BoundsReport bounds;
    int garbage_outputs = 0;
    int constant_inputs = 0;
};

/// Passes iff the netlist's primary outputs compute the table (matched
/// positionally, declaration order against output bit order) and the
/// netlist meets both lower bounds.  Throws std::invalid_argument when
/// the netlist arity does not match the table.
RealizationCheck verify_realization(const FunctionTable& table, const Netlist& netlist);

}  // namespace revskip
