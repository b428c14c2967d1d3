#pragma once

/// @file netlist.hpp
/// Line-based reversible netlists: construction, the rnl text format,
/// simulation, support-aware arrival times, metrics and equivalence
/// checking against a reference function.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "revskip/gate.hpp"

namespace revskip {

/// Raised by the text parsers on malformed input.
class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Where a line's initial value comes from.
struct LineSource {
    enum class Kind { Input, Constant };
    Kind kind = Kind::Input;
    std::string name;  // primary inputs only
    int bit = 0;       // constants only
    bool operator==(const LineSource&) const = default;
};

/// What a line's final value is used for.
struct LineSink {
    enum class Kind { Output, Garbage };
    Kind kind = Kind::Garbage;
    std::string name;  // primary outputs only
    bool operator==(const LineSink&) const = default;
};

/// One gate application; lines[p] is the line wired to port p.
struct GateInstance {
    Gate gate;
    std::vector<int> lines;
    bool operator==(const GateInstance&) const = default;
};

/// A labelled probe on a line at a fixed point in the gate sequence:
/// `position` gates have been applied before the probe is read.  Marks
/// are stored in creation order, so positions are nondecreasing.
struct Mark {
    int line = 0;
    std::string label;
    int position = 0;
    bool operator==(const Mark&) const = default;
};

class NetlistBuilder;

/// An immutable reversible netlist over a fixed set of lines.  Every line
/// has exactly one source (primary input or constant) and one sink
/// (primary output or garbage); gates are applied in sequence order.
class Netlist {
  public:
    int line_count() const { return line_count_; }
    const std::vector<LineSource>& sources() const { return sources_; }
    const std::vector<LineSink>& sinks() const { return sinks_; }
    const std::vector<GateInstance>& gates() const { return gates_; }
    const std::vector<Mark>& marks() const { return marks_; }

    /// Lines in source declaration order (first declared input = MSB of
    /// input words) and sink declaration order (same for outputs).
    const std::vector<int>& source_order() const { return source_order_; }
    const std::vector<int>& sink_order() const { return sink_order_; }
    /// Primary input / output lines in declaration order.
    const std::vector<int>& input_lines() const { return input_lines_; }
    const std::vector<int>& output_lines() const { return output_lines_; }

    int input_count() const { return static_cast<int>(input_lines_.size()); }
    int output_count() const { return static_cast<int>(output_lines_.size()); }

    /// Generalized gate definitions in declaration order.
    const std::vector<std::pair<std::string, GeneralizedSpec>>& gate_definitions() const {
        return definitions_;
    }

    /// Index into marks() of the first mark with this label, if any.
    std::optional<std::size_t> find_mark(std::string_view label) const;

    bool operator==(const Netlist&) const = default;

  private:
    friend class NetlistBuilder;
    Netlist() = default;

    int line_count_ = 0;
    std::vector<LineSource> sources_;
    std::vector<LineSink> sinks_;
    std::vector<GateInstance> gates_;
    std::vector<Mark> marks_;
    std::vector<int> source_order_;
    std::vector<int> sink_order_;
    std::vector<int> input_lines_;
    std::vector<int> output_lines_;
    std::vector<std::pair<std::string, GeneralizedSpec>> definitions_;
};

/// Incremental netlist construction.  Lines are created by add_input /
/// add_constant (which fixes the source order), gates and marks are
/// appended, and sinks are declared last; build() checks completeness.
class NetlistBuilder {
  public:
    /// Starts with no lines; add_input / add_constant create them.
    NetlistBuilder() = default;
    /// Starts with line_count sourceless lines for set_input / set_constant,
    /// the shape the text parser needs.
    explicit NetlistBuilder(int line_count);

    /// Declares a new primary input line; returns its index.
    int add_input(std::string name);
    /// Declares a new constant line preset to bit; returns its index.
    int add_constant(int bit);

    /// Attaches a source to an existing line (declaration order is call order).
    void set_input(int line, std::string name);
    void set_constant(int line, int bit);

    /// Registers a generalized gate definition without applying it.
    void define_gate(const std::string& name, const GeneralizedSpec& spec);

    /// Appends a gate application on the given lines (one per port).
    /// Throws std::invalid_argument on arity mismatch, repeated or
    /// out-of-range operands.
    void apply(const Gate& gate, const std::vector<int>& lines);

    /// Labels the current value of a line.
    void mark(int line, std::string label);

    /// Declares a line's final value a primary output / garbage.
    void set_output(int line, std::string name);
    void set_garbage(int line);

    /// Validates and returns the finished netlist.  Throws
    /// std::invalid_argument when a line is missing a sink.
    Netlist build() const;

  private:
    void check_line(int line) const;

    Netlist netlist_;
    std::vector<bool> has_source_;
    std::vector<bool> has_sink_;
};

/// Parses the rnl text format.  Throws ParseError with an "rnl:<line>:"
/// prefix for syntax errors; completeness errors name the offending
/// netlist line.
Netlist parse_netlist(std::string_view text);

/// Renders to the rnl text format; parse_netlist(render_netlist(n)) == n.
std::string render_netlist(const Netlist& netlist);

/// Simulation of a single input assignment.
struct SimulationResult {
    std::vector<int> outputs;      // primary outputs, declaration order
    std::vector<int> garbage;      // garbage lines, sink declaration order
    std::vector<int> final_lines;  // every line's final value
    std::vector<int> mark_values;  // line value at each mark's position
};

/// Runs the netlist on one bit per primary input (declaration order).
SimulationResult simulate(const Netlist& netlist, const std::vector<int>& input_bits);

/// Word form of simulate: the first-declared input / output is the MSB.
std::uint64_t simulate_word(const Netlist& netlist, std::uint64_t input_word);

/// Output word for every input word, indexed by input word.
/// Throws std::invalid_argument for netlists with more than 24 inputs.
std::vector<std::uint64_t> truth_table(const Netlist& netlist);

/// Unit-delay arrival times.  A gate output becomes valid one step after
/// the latest arrival among the inputs it actually depends on, so a
/// pass-through port does not wait for the other operands.
struct ArrivalMap {
    std::vector<int> line_time;                       // final time per line
    std::vector<std::vector<int>> gate_output_time;   // per gate, per port
    std::vector<int> mark_time;                       // parallel to marks()
    int depth = 0;                                    // max over primary outputs
};

ArrivalMap arrival_times(const Netlist& netlist);

/// Aggregate structural counts and costs.
struct Metrics {
    int gate_count = 0;
    std::map<std::string, int> gate_count_by_kind;
    std::optional<long long> quantum_cost;       // nullopt if any gate unknown
    std::optional<ClassicalCost> classical_cost; // nullopt if any gate unknown
    int constant_inputs = 0;
    int garbage_outputs = 0;
    int primary_inputs = 0;
    int primary_outputs = 0;
    int width = 0;  // total lines
    int depth = 0;
};

Metrics metrics(const Netlist& netlist);

/// Deterministic 64-bit linear congruential generator (the MMIX
/// multiplier 6364136223846793005 with increment 1442695040888963407).
/// Sampled input words take the top bits of successive states, so runs
/// with equal seeds enumerate identical cases.
class Lcg64 {
  public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// Top `bits` bits of the next state (bits in 1..63).
    std::uint64_t next_word(int bits) { return next() >> (64 - bits); }

  private:
    std::uint64_t state_;
};

/// Reference function for equivalence checks, on input/output words with
/// the first-declared input / output as MSB.
using WordOracle = std::function<std::uint64_t(std::uint64_t)>;

/// How to enumerate equivalence-check cases.
struct EquivalenceMode {
    static EquivalenceMode exhaustive() { return {true, 0, 0}; }
    static EquivalenceMode random(long long count, std::uint64_t seed) {
        return {false, count, seed};
    }
    bool is_exhaustive = true;
    long long count = 0;
    std::uint64_t seed = 0;
};

/// Outcome of an equivalence check.  On failure the counterexample is the
/// first mismatch in enumeration order (ascending input words when
/// exhaustive), reported as bitstrings in declaration order.
struct EquivalenceResult {
    bool pass = true;
    long long cases_checked = 0;
    std::string counterexample;  // input bits; empty on pass
    std::string expected;        // oracle output bits
    std::string actual;          // netlist output bits
};

/// Checks the netlist against an oracle over whole words.  Exhaustive
/// mode requires at most 24 inputs; random mode at most 63.
EquivalenceResult check_equivalence(const Netlist& netlist, const WordOracle& oracle,
                                    const EquivalenceMode& mode);

/// Oracle for an N-bit adder interface: inputs A1..AN, B1..BN, Cin
/// (MSB first), outputs S1..SN, Cout.  Requires bits <= 31 so the
/// 2N+1 input bits fit a word.
WordOracle adder_oracle(int bits);

/// Equivalence against integer addition for an N-bit adder netlist of
/// any width; wide netlists (over 63 input bits) are sampled with the
/// same generator, consuming one state per 64 input bits.
EquivalenceResult check_adder_equivalence(const Netlist& netlist, int bits,
                                          const EquivalenceMode& mode);

}  // namespace revskip
