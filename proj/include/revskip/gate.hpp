#pragma once

/// @file gate.hpp
/// Reversible gate primitives: the named gates (not, feynman, toffoli,
/// fredkin, peres) and the generalized k-line family, with evaluation,
/// cost attribution and truth-table extraction.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace revskip {

/// Widest gate that can be evaluated or tabulated.
inline constexpr int kMaxGateWidth = 20;

enum class GateKind { Inverter, Feynman, Toffoli, Fredkin, Peres, Generalized };

/// Two-input-gate realization counts of a reversible gate.
struct ClassicalCost {
    int xor_count = 0;
    int and_count = 0;
    int not_count = 0;
    bool operator==(const ClassicalCost&) const = default;
};

/// Defining tables of a generalized k-line gate.
///
/// The gate passes lines 1..k-2 through unchanged, XORs line k-1 with
/// f_low(A1..A_{k-2}) and XORs line k with f_high(A1..A_{k-1}).  Both
/// functions are stored as truth-table bitstrings over {'0','1'} indexed
/// with A1 as the most-significant bit; f_low has 2^(k-2) entries (a
/// single constant bit when k = 2) and f_high has 2^(k-1).
struct GeneralizedSpec {
    int width = 2;
    std::string f_low;
    std::string f_high;

    /// Throws std::invalid_argument when the bitstring lengths do not
    /// match the width or contain characters outside {0,1}.
    void validate() const;

    bool operator==(const GeneralizedSpec&) const = default;
};

/// Exhaustive evaluation of a gate: entries[w] is the output word for
/// input word w, with A1 the most-significant bit on both sides.
struct TruthTable {
    int width = 0;
    std::vector<std::uint32_t> entries;

    /// True when entries is a permutation of 0..2^width-1.
    bool is_permutation() const;

    bool operator==(const TruthTable&) const = default;
};

/// An immutable reversible gate.  Instances are created through
/// make_named_gate / make_generalized_gate and are safe to share.
class Gate {
  public:
    const std::string& name() const { return name_; }
    GateKind kind() const { return kind_; }
    int width() const { return width_; }
    const std::optional<GeneralizedSpec>& family_spec() const { return spec_; }

    /// Input ports output `port` depends on, as a bitmask over port
    /// indices (bit 0 = A1).  Ports are numbered 0..width-1.
    std::uint32_t support(int port) const;

    /// Cost in 2x2 quantum primitives; nullopt when unknown.
    std::optional<int> quantum_cost() const { return quantum_cost_; }

    /// Two-input XOR/AND/NOT realization counts; nullopt when unknown.
    std::optional<ClassicalCost> classical_cost() const { return classical_cost_; }

    /// Applies the gate to a width-bit input word (A1 = MSB).
    /// Throws std::invalid_argument when the word has bits beyond the width.
    std::uint32_t eval(std::uint32_t input) const;

    bool operator==(const Gate& other) const;

  private:
    Gate() = default;
    friend Gate make_named_gate(std::string_view name);
    friend Gate make_generalized_gate(const GeneralizedSpec& spec, std::string name);

    std::string name_;
    GateKind kind_ = GateKind::Inverter;
    int width_ = 1;
    std::optional<GeneralizedSpec> spec_;
    std::vector<std::uint32_t> supports_;
    std::optional<int> quantum_cost_;
    std::optional<ClassicalCost> classical_cost_;
};

/// Builds one of the five builtin gates: "not", "feynman", "toffoli",
/// "fredkin" or "peres".  Throws std::invalid_argument for other names.
Gate make_named_gate(std::string_view name);

/// Builds a gate of the generalized family from its defining tables.
/// Costs are unknown unless the truth table coincides with a builtin,
/// in which case the builtin's costs are adopted.
Gate make_generalized_gate(const GeneralizedSpec& spec, std::string name = "custom");

/// Tabulates all 2^width evaluations of the gate.
TruthTable gate_truth_table(const Gate& gate);

}  // namespace revskip
