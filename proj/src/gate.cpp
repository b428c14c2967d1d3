#include "revskip/gate.hpp"

#include <algorithm>
#include <stdexcept>

namespace revskip {

namespace {

bool is_bitstring(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

/// Support of a truth-table bitstring over `vars` inputs, as a mask over
/// variable indices (bit 0 = A1, the MSB of the table index).
std::uint32_t table_support(const std::string& table, int vars) {
    std::uint32_t mask = 0;
    for (int v = 0; v < vars; ++v) {
        const std::size_t flip = std::size_t{1} << (vars - 1 - v);
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table[i] != table[i ^ flip]) {
                mask |= std::uint32_t{1} << v;
                break;
            }
        }
    }
    return mask;
}

struct BuiltinInfo {
    std::string_view name;
    GateKind kind;
    int width;
    int quantum_cost;
    ClassicalCost classical_cost;
    std::vector<std::uint32_t> supports;  // per output port, mask over input ports
};

const std::vector<BuiltinInfo>& builtin_infos() {
    static const std::vector<BuiltinInfo> infos = {
        {"not", GateKind::Inverter, 1, 0, {0, 0, 1}, {0b1}},
        {"feynman", GateKind::Feynman, 2, 1, {1, 0, 0}, {0b01, 0b11}},
        {"toffoli", GateKind::Toffoli, 3, 5, {1, 1, 0}, {0b001, 0b010, 0b111}},
        {"fredkin", GateKind::Fredkin, 3, 5, {2, 4, 1}, {0b001, 0b111, 0b111}},
        {"peres", GateKind::Peres, 3, 4, {2, 1, 0}, {0b001, 0b011, 0b111}},
    };
    return infos;
}

std::uint32_t eval_builtin(GateKind kind, std::uint32_t w) {
    switch (kind) {
        case GateKind::Inverter:
            return w ^ 1u;
        case GateKind::Feynman: {
            const std::uint32_t a = (w >> 1) & 1u, b = w & 1u;
            return (a << 1) | (a ^ b);
        }
        case GateKind::Toffoli: {
            const std::uint32_t a = (w >> 2) & 1u, b = (w >> 1) & 1u, c = w & 1u;
            return (a << 2) | (b << 1) | ((a & b) ^ c);
        }
        case GateKind::Fredkin: {
            // Controlled swap: A passes, B and C exchange when A = 1.
            const std::uint32_t a = (w >> 2) & 1u, b = (w >> 1) & 1u, c = w & 1u;
            const std::uint32_t q = a ? c : b;
            const std::uint32_t r = a ? b : c;
            return (a << 2) | (q << 1) | r;
        }
        case GateKind::Peres: {
            const std::uint32_t a = (w >> 2) & 1u, b = (w >> 1) & 1u, c = w & 1u;
            return (a << 2) | ((a ^ b) << 1) | ((a & b) ^ c);
        }
        case GateKind::Generalized:
            break;
    }
    throw std::logic_error("eval_builtin: not a builtin kind");
}

}  // namespace

void GeneralizedSpec::validate() const {
    if (width < 2) {
        throw std::invalid_argument("generalized gate width must be at least 2");
    }
    if (width > kMaxGateWidth) {
        throw std::invalid_argument("generalized gate width exceeds limit of " +
                                    std::to_string(kMaxGateWidth));
    }
    const std::size_t low_len = std::size_t{1} << (width - 2);
    const std::size_t high_len = std::size_t{1} << (width - 1);
    if (f_low.size() != low_len) {
        throw std::invalid_argument("f_low must have " + std::to_string(low_len) +
                                    " entries for width " + std::to_string(width) + ", got " +
                                    std::to_string(f_low.size()));
    }
    if (f_high.size() != high_len) {
        throw std::invalid_argument("f_high must have " + std::to_string(high_len) +
                                    " entries for width " + std::to_string(width) + ", got " +
                                    std::to_string(f_high.size()));
    }
    if (!is_bitstring(f_low) || !is_bitstring(f_high)) {
        throw std::invalid_argument("defining tables must contain only 0 and 1");
    }
}

bool TruthTable::is_permutation() const {
    const std::size_t size = std::size_t{1} << width;
    if (entries.size() != size) return false;
    std::vector<bool> seen(size, false);
    for (std::uint32_t e : entries) {
        if (e >= size || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

std::uint32_t Gate::support(int port) const {
    if (port < 0 || port >= width_) {
        throw std::invalid_argument("support: port " + std::to_string(port) +
                                    " out of range for width " + std::to_string(width_));
    }
    return supports_[static_cast<std::size_t>(port)];
}

std::uint32_t Gate::eval(std::uint32_t input) const {
    if (width_ < 32 && (input >> width_) != 0) {
        throw std::invalid_argument("input word exceeds gate width");
    }
    if (kind_ != GateKind::Generalized) {
        return eval_builtin(kind_, input);
    }
    // Lines 1..k-2 pass through; the two low bits pick up the table values.
    const GeneralizedSpec& s = *spec_;
    std::uint32_t out = input;
    out ^= (s.f_low[input >> 2] == '1' ? 2u : 0u);
    out ^= (s.f_high[input >> 1] == '1' ? 1u : 0u);
    return out;
}

bool Gate::operator==(const Gate& other) const {
    return kind_ == other.kind_ && width_ == other.width_ && name_ == other.name_ &&
           spec_ == other.spec_;
}

Gate make_named_gate(std::string_view name) {
    for (const BuiltinInfo& info : builtin_infos()) {
        if (info.name == name) {
            Gate g;
            g.name_ = std::string(info.name);
            g.kind_ = info.kind;
            g.width_ = info.width;
            g.supports_ = info.supports;
            g.quantum_cost_ = info.quantum_cost;
            g.classical_cost_ = info.classical_cost;
            return g;
        }
    }
    throw std::invalid_argument("unknown gate name '" + std::string(name) + "'");
}

Gate make_generalized_gate(const GeneralizedSpec& spec, std::string name) {
    spec.validate();
    Gate g;
    g.name_ = std::move(name);
    g.kind_ = GateKind::Generalized;
    g.width_ = spec.width;
    g.spec_ = spec;

    const int k = spec.width;
    g.supports_.assign(static_cast<std::size_t>(k), 0);
    for (int p = 0; p + 2 < k; ++p) {
        g.supports_[static_cast<std::size_t>(p)] = std::uint32_t{1} << p;
    }
    g.supports_[static_cast<std::size_t>(k - 2)] =
        (std::uint32_t{1} << (k - 2)) | table_support(spec.f_low, k - 2);
    g.supports_[static_cast<std::size_t>(k - 1)] =
        (std::uint32_t{1} << (k - 1)) | table_support(spec.f_high, k - 1);

    // A table matching a builtin of the same width inherits its costs.
    const TruthTable table = gate_truth_table(g);
    for (const BuiltinInfo& info : builtin_infos()) {
        if (info.width != k) continue;
        const TruthTable builtin_table = gate_truth_table(make_named_gate(info.name));
        if (builtin_table.entries == table.entries) {
            g.quantum_cost_ = info.quantum_cost;
            g.classical_cost_ = info.classical_cost;
            break;
        }
    }
    return g;
}

TruthTable gate_truth_table(const Gate& gate) {
    if (gate.width() > kMaxGateWidth) {
        throw std::invalid_argument("gate width too large to tabulate");
    }
    TruthTable t;
    t.width = gate.width();
    const std::uint32_t size = std::uint32_t{1} << gate.width();
    t.entries.reserve(size);
    for (std::uint32_t w = 0; w < size; ++w) {
        t.entries.push_back(gate.eval(w));
    }
    return t;
}

}  // namespace revskip
