#include "revskip/netlist.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace revskip {

namespace {

bool is_token(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isgraph(c) != 0;
    });
}

void require_token(const std::string& s, const char* what) {
    if (!is_token(s)) {
        throw std::invalid_argument(std::string(what) +
                                    " must be a non-empty token without whitespace");
    }
}

std::string to_bits(std::uint64_t word, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((word >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::string bits_of(const std::vector<int>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace

std::optional<std::size_t> Netlist::find_mark(std::string_view label) const {
    for (std::size_t i = 0; i < marks_.size(); ++i) {
        if (marks_[i].label == label) return i;
    }
    return std::nullopt;
}

NetlistBuilder::NetlistBuilder(int line_count) {
    if (line_count < 1) {
        throw std::invalid_argument("line count must be positive");
    }
    netlist_.line_count_ = line_count;
    netlist_.sources_.resize(static_cast<std::size_t>(line_count));
    netlist_.sinks_.resize(static_cast<std::size_t>(line_count));
    has_source_.assign(static_cast<std::size_t>(line_count), false);
    has_sink_.assign(static_cast<std::size_t>(line_count), false);
}

void NetlistBuilder::check_line(int line) const {
    if (line < 0 || line >= netlist_.line_count_) {
        throw std::invalid_argument("line index " + std::to_string(line) +
                                    " out of range for " +
                                    std::to_string(netlist_.line_count_) + " lines");
    }
}

int NetlistBuilder::add_input(std::string name) {
    const int line = netlist_.line_count_++;
    netlist_.sources_.emplace_back();
    netlist_.sinks_.emplace_back();
    has_source_.push_back(false);
    has_sink_.push_back(false);
    set_input(line, std::move(name));
    return line;
}

int NetlistBuilder::add_constant(int bit) {
    const int line = netlist_.line_count_++;
    netlist_.sources_.emplace_back();
    netlist_.sinks_.emplace_back();
    has_source_.push_back(false);
    has_sink_.push_back(false);
    set_constant(line, bit);
    return line;
}

void NetlistBuilder::set_input(int line, std::string name) {
    check_line(line);
    require_token(name, "input name");
    if (has_source_[static_cast<std::size_t>(line)]) {
        throw std::invalid_argument("line " + std::to_string(line) + " already has a source");
    }
    netlist_.sources_[static_cast<std::size_t>(line)] = {LineSource::Kind::Input, std::move(name), 0};
    has_source_[static_cast<std::size_t>(line)] = true;
    netlist_.source_order_.push_back(line);
    netlist_.input_lines_.push_back(line);
}

void NetlistBuilder::set_constant(int line, int bit) {
    check_line(line);
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("constant value must be 0 or 1");
    }
    if (has_source_[static_cast<std::size_t>(line)]) {
        throw std::invalid_argument("line " + std::to_string(line) + " already has a source");
    }
    netlist_.sources_[static_cast<std::size_t>(line)] = {LineSource::Kind::Constant, "", bit};
    has_source_[static_cast<std::size_t>(line)] = true;
    netlist_.source_order_.push_back(line);
}

void NetlistBuilder::define_gate(const std::string& name, const GeneralizedSpec& spec) {
    require_token(name, "gate name");
    spec.validate();
    static const char* builtin_names[] = {"not", "feynman", "toffoli", "fredkin", "peres"};
    for (const char* b : builtin_names) {
        if (name == b) {
            throw std::invalid_argument("gate definition '" + name + "' shadows a builtin gate");
        }
    }
    for (const auto& [existing, existing_spec] : netlist_.definitions_) {
        if (existing == name) {
            if (existing_spec == spec) return;
            throw std::invalid_argument("conflicting definition for gate '" + name + "'");
        }
    }
    netlist_.definitions_.emplace_back(name, spec);
}

void NetlistBuilder::apply(const Gate& gate, const std::vector<int>& lines) {
    if (static_cast<int>(lines.size()) != gate.width()) {
        throw std::invalid_argument("gate " + gate.name() + " expects " +
                                    std::to_string(gate.width()) + " operands, got " +
                                    std::to_string(lines.size()));
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        check_line(lines[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (lines[i] == lines[j]) {
                throw std::invalid_argument("repeated operand " + std::to_string(lines[i]));
            }
        }
    }
    if (gate.kind() == GateKind::Generalized) {
        define_gate(gate.name(), *gate.family_spec());
    }
    netlist_.gates_.push_back({gate, lines});
}

void NetlistBuilder::mark(int line, std::string label) {
    check_line(line);
    require_token(label, "mark label");
    netlist_.marks_.push_back(
        {line, std::move(label), static_cast<int>(netlist_.gates_.size())});
}

void NetlistBuilder::set_output(int line, std::string name) {
    check_line(line);
    require_token(name, "output name");
    if (has_sink_[static_cast<std::size_t>(line)]) {
        throw std::invalid_argument("line " + std::to_string(line) + " already has a sink");
    }
    netlist_.sinks_[static_cast<std::size_t>(line)] = {LineSink::Kind::Output, std::move(name)};
    has_sink_[static_cast<std::size_t>(line)] = true;
    netlist_.sink_order_.push_back(line);
    netlist_.output_lines_.push_back(line);
}

void NetlistBuilder::set_garbage(int line) {
    check_line(line);
    if (has_sink_[static_cast<std::size_t>(line)]) {
        throw std::invalid_argument("line " + std::to_string(line) + " already has a sink");
    }
    netlist_.sinks_[static_cast<std::size_t>(line)] = {LineSink::Kind::Garbage, ""};
    has_sink_[static_cast<std::size_t>(line)] = true;
    netlist_.sink_order_.push_back(line);
}

Netlist NetlistBuilder::build() const {
    for (int i = 0; i < netlist_.line_count_; ++i) {
        if (!has_source_[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("line " + std::to_string(i) + " has no source");
        }
    }
    for (int i = 0; i < netlist_.line_count_; ++i) {
        if (!has_sink_[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("line " + std::to_string(i) + " has no sink");
        }
    }
    return netlist_;
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == '#') break;  // comment runs to end of line
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

long long parse_integer(const std::string& token, const std::function<void(const std::string&)>& fail) {
    long long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        fail("expected integer, got '" + token + "'");
    }
    return value;
}

}  // namespace

Netlist parse_netlist(std::string_view text) {
    std::optional<NetlistBuilder> builder;
    std::vector<std::pair<std::string, GeneralizedSpec>> local_defs;
    bool header_seen = false;
    bool any_gate = false;
    bool any_sink = false;
    int line_no = 0;

    auto fail = [&line_no](const std::string& msg) {
        throw ParseError("rnl:" + std::to_string(std::max(line_no, 1)) + ": " + msg);
    };
    auto fail_fn = std::function<void(const std::string&)>(
        [&fail](const std::string& msg) { fail(msg); });

    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& kw = tokens[0];

        if (!header_seen) {
            if (kw != "rnl" || tokens.size() != 2 || tokens[1] != "1") {
                fail("expected header 'rnl 1'");
            }
            header_seen = true;
            continue;
        }
        if (!builder) {
            if (kw != "lines" || tokens.size() != 2) {
                fail("expected 'lines <count>' after the header");
            }
            const long long n = parse_integer(tokens[1], fail_fn);
            if (n < 1 || n > 1'000'000) fail("line count must be between 1 and 1000000");
            builder.emplace(static_cast<int>(n));
            continue;
        }

        try {
            if (kw == "defgate") {
                if (any_gate) fail("gate definitions must precede gate applications");
                if (tokens.size() != 5) fail("expected 'defgate <name> <width> <f_low> <f_high>'");
                const long long k = parse_integer(tokens[2], fail_fn);
                if (k < 2 || k > kMaxGateWidth) fail("defgate width out of range");
                GeneralizedSpec spec{static_cast<int>(k), tokens[3], tokens[4]};
                builder->define_gate(tokens[1], spec);
                local_defs.emplace_back(tokens[1], std::move(spec));
            } else if (kw == "in") {
                if (any_gate || any_sink) fail("sources must be declared before gates and sinks");
                if (tokens.size() != 3) fail("expected 'in <line> <name>'");
                builder->set_input(static_cast<int>(parse_integer(tokens[1], fail_fn)), tokens[2]);
            } else if (kw == "const") {
                if (any_gate || any_sink) fail("sources must be declared before gates and sinks");
                if (tokens.size() != 3) fail("expected 'const <line> <0|1>'");
                const long long bit = parse_integer(tokens[2], fail_fn);
                builder->set_constant(static_cast<int>(parse_integer(tokens[1], fail_fn)),
                                      static_cast<int>(bit));
            } else if (kw == "gate") {
                if (any_sink) fail("gates must precede sink declarations");
                if (tokens.size() < 2) fail("expected 'gate <name> <lines...>'");
                const std::string& name = tokens[1];
                std::optional<Gate> gate;
                for (const auto& [def_name, def_spec] : local_defs) {
                    if (def_name == name) {
                        gate = make_generalized_gate(def_spec, def_name);
                        break;
                    }
                }
                if (!gate) {
                    try {
                        gate = make_named_gate(name);
                    } catch (const std::invalid_argument&) {
                        fail("unknown gate name '" + name + "'");
                    }
                }
                std::vector<int> lines;
                for (std::size_t i = 2; i < tokens.size(); ++i) {
                    lines.push_back(static_cast<int>(parse_integer(tokens[i], fail_fn)));
                }
                builder->apply(*gate, lines);
                any_gate = true;
            } else if (kw == "out") {
                if (tokens.size() != 3) fail("expected 'out <line> <name>'");
                builder->set_output(static_cast<int>(parse_integer(tokens[1], fail_fn)), tokens[2]);
                any_sink = true;
            } else if (kw == "garbage") {
                if (tokens.size() != 2) fail("expected 'garbage <line>'");
                builder->set_garbage(static_cast<int>(parse_integer(tokens[1], fail_fn)));
                any_sink = true;
            } else if (kw == "mark") {
                if (tokens.size() != 3) fail("expected 'mark <line> <label>'");
                builder->mark(static_cast<int>(parse_integer(tokens[1], fail_fn)), tokens[2]);
            } else {
                fail("unknown statement '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }

    if (!header_seen) fail("expected header 'rnl 1'");
    if (!builder) fail("expected 'lines <count>' after the header");
    try {
        return builder->build();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string render_netlist(const Netlist& netlist) {
    std::ostringstream out;
    out << "rnl 1\n";
    out << "lines " << netlist.line_count() << "\n";
    for (const auto& [name, spec] : netlist.gate_definitions()) {
        out << "defgate " << name << " " << spec.width << " " << spec.f_low << " "
            << spec.f_high << "\n";
    }
    for (int line : netlist.source_order()) {
        const LineSource& src = netlist.sources()[static_cast<std::size_t>(line)];
        if (src.kind == LineSource::Kind::Input) {
            out << "in " << line << " " << src.name << "\n";
        } else {
            out << "const " << line << " " << src.bit << "\n";
        }
    }
    const auto& gates = netlist.gates();
    const auto& marks = netlist.marks();
    for (std::size_t g = 0; g <= gates.size(); ++g) {
        for (const Mark& m : marks) {
            if (m.position == static_cast<int>(g)) {
                out << "mark " << m.line << " " << m.label << "\n";
            }
        }
        if (g == gates.size()) break;
        out << "gate " << gates[g].gate.name();
        for (int line : gates[g].lines) out << " " << line;
        out << "\n";
    }
    for (int line : netlist.sink_order()) {
        const LineSink& sink = netlist.sinks()[static_cast<std::size_t>(line)];
        if (sink.kind == LineSink::Kind::Output) {
            out << "out " << line << " " << sink.name << "\n";
        } else {
            out << "garbage " << line << "\n";
        }
    }
    return out.str();
}

SimulationResult simulate(const Netlist& netlist, const std::vector<int>& input_bits) {
    if (static_cast<int>(input_bits.size()) != netlist.input_count()) {
        throw std::invalid_argument("expected " + std::to_string(netlist.input_count()) +
                                    " input bits, got " + std::to_string(input_bits.size()));
    }
    for (int b : input_bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("input bits must be 0 or 1");
    }

    std::vector<std::uint8_t> value(static_cast<std::size_t>(netlist.line_count()), 0);
    for (std::size_t i = 0; i < netlist.input_lines().size(); ++i) {
        value[static_cast<std::size_t>(netlist.input_lines()[i])] =
            static_cast<std::uint8_t>(input_bits[i]);
    }
    for (int line = 0; line < netlist.line_count(); ++line) {
        const LineSource& src = netlist.sources()[static_cast<std::size_t>(line)];
        if (src.kind == LineSource::Kind::Constant) {
            value[static_cast<std::size_t>(line)] = static_cast<std::uint8_t>(src.bit);
        }
    }

    SimulationResult res;
    res.mark_values.assign(netlist.marks().size(), 0);
    const auto& gates = netlist.gates();
    const auto& marks = netlist.marks();
    std::size_t next_mark = 0;  // mark positions are nondecreasing by construction
    for (std::size_t g = 0; g <= gates.size(); ++g) {
        while (next_mark < marks.size() && marks[next_mark].position == static_cast<int>(g)) {
            res.mark_values[next_mark] =
                value[static_cast<std::size_t>(marks[next_mark].line)];
            ++next_mark;
        }
        if (g == gates.size()) break;

        const GateInstance& inst = gates[g];
        const int k = inst.gate.width();
        std::uint32_t word = 0;
        for (int p = 0; p < k; ++p) {
            word |= static_cast<std::uint32_t>(value[static_cast<std::size_t>(inst.lines[p])])
                    << (k - 1 - p);
        }
        const std::uint32_t result = inst.gate.eval(word);
        for (int p = 0; p < k; ++p) {
            value[static_cast<std::size_t>(inst.lines[p])] =
                static_cast<std::uint8_t>((result >> (k - 1 - p)) & 1u);
        }
    }

    for (int line : netlist.output_lines()) {
        res.outputs.push_back(value[static_cast<std::size_t>(line)]);
    }
    for (int line : netlist.sink_order()) {
        if (netlist.sinks()[static_cast<std::size_t>(line)].kind == LineSink::Kind::Garbage) {
            res.garbage.push_back(value[static_cast<std::size_t>(line)]);
        }
    }
    res.final_lines.assign(value.begin(), value.end());
    return res;
}

std::uint64_t simulate_word(const Netlist& netlist, std::uint64_t input_word) {
    const int n_in = netlist.input_count();
    const int n_out = netlist.output_count();
    if (n_in > 63 || n_out > 63) {
        throw std::invalid_argument("netlist too wide for word simulation");
    }
    if (n_in < 64 && (input_word >> n_in) != 0) {
        throw std::invalid_argument("input word exceeds input count");
    }
    std::vector<int> bits(static_cast<std::size_t>(n_in));
    for (int i = 0; i < n_in; ++i) {
        bits[static_cast<std::size_t>(i)] = static_cast<int>((input_word >> (n_in - 1 - i)) & 1u);
    }
    const SimulationResult res = simulate(netlist, bits);
    std::uint64_t out = 0;
    for (int i = 0; i < n_out; ++i) {
        out |= static_cast<std::uint64_t>(res.outputs[static_cast<std::size_t>(i)])
               << (n_out - 1 - i);
    }
    return out;
}

std::vector<std::uint64_t> truth_table(const Netlist& netlist) {
    if (netlist.input_count() > 24) {
        throw std::invalid_argument("truth table limited to 24 inputs");
    }
    const std::uint64_t size = std::uint64_t{1} << netlist.input_count();
    std::vector<std::uint64_t> table;
    table.reserve(size);
    for (std::uint64_t w = 0; w < size; ++w) {
        table.push_back(simulate_word(netlist, w));
    }
    return table;
}

ArrivalMap arrival_times(const Netlist& netlist) {
    ArrivalMap map;
    map.line_time.assign(static_cast<std::size_t>(netlist.line_count()), 0);
    map.mark_time.assign(netlist.marks().size(), 0);

    const auto& gates = netlist.gates();
    const auto& marks = netlist.marks();
    std::size_t next_mark = 0;  // mark positions are nondecreasing by construction
    for (std::size_t g = 0; g <= gates.size(); ++g) {
        while (next_mark < marks.size() && marks[next_mark].position == static_cast<int>(g)) {
            map.mark_time[next_mark] =
                map.line_time[static_cast<std::size_t>(marks[next_mark].line)];
            ++next_mark;
        }
        if (g == gates.size()) break;

        const GateInstance& inst = gates[g];
        const int k = inst.gate.width();
        std::vector<int> out_time(static_cast<std::size_t>(k), 0);
        for (int p = 0; p < k; ++p) {
            const std::uint32_t mask = inst.gate.support(p);
            int latest = 0;
            for (int q = 0; q < k; ++q) {
                if ((mask >> q) & 1u) {
                    latest = std::max(latest,
                                      map.line_time[static_cast<std::size_t>(inst.lines[q])]);
                }
            }
            out_time[static_cast<std::size_t>(p)] = latest + 1;
        }
        for (int p = 0; p < k; ++p) {
            map.line_time[static_cast<std::size_t>(inst.lines[p])] =
                out_time[static_cast<std::size_t>(p)];
        }
        map.gate_output_time.push_back(std::move(out_time));
    }

    map.depth = 0;
    for (int line : netlist.output_lines()) {
        map.depth = std::max(map.depth, map.line_time[static_cast<std::size_t>(line)]);
    }
    return map;
}

Metrics metrics(const Netlist& netlist) {
    Metrics m;
    m.gate_count = static_cast<int>(netlist.gates().size());
    m.width = netlist.line_count();
    m.primary_inputs = netlist.input_count();
    m.primary_outputs = netlist.output_count();

    long long qcost = 0;
    ClassicalCost ccost;
    bool qcost_known = true;
    bool ccost_known = true;
    for (const GateInstance& inst : netlist.gates()) {
        m.gate_count_by_kind[inst.gate.name()] += 1;
        if (inst.gate.quantum_cost()) {
            qcost += *inst.gate.quantum_cost();
        } else {
            qcost_known = false;
        }
        if (inst.gate.classical_cost()) {
            ccost.xor_count += inst.gate.classical_cost()->xor_count;
            ccost.and_count += inst.gate.classical_cost()->and_count;
            ccost.not_count += inst.gate.classical_cost()->not_count;
        } else {
            ccost_known = false;
        }
    }
    if (qcost_known) m.quantum_cost = qcost;
    if (ccost_known) m.classical_cost = ccost;

    for (const LineSource& src : netlist.sources()) {
        if (src.kind == LineSource::Kind::Constant) m.constant_inputs += 1;
    }
    for (const LineSink& sink : netlist.sinks()) {
        if (sink.kind == LineSink::Kind::Garbage) m.garbage_outputs += 1;
    }
    m.depth = arrival_times(netlist).depth;
    return m;
}

EquivalenceResult check_equivalence(const Netlist& netlist, const WordOracle& oracle,
                                    const EquivalenceMode& mode) {
    const int n_in = netlist.input_count();
    const int n_out = netlist.output_count();
    EquivalenceResult res;

    auto record_failure = [&](std::uint64_t input, std::uint64_t expected, std::uint64_t actual) {
        res.pass = false;
        res.counterexample = to_bits(input, n_in);
        res.expected = to_bits(expected, n_out);
        res.actual = to_bits(actual, n_out);
    };

    if (mode.is_exhaustive) {
        if (n_in > 24) {
            throw std::invalid_argument("exhaustive check limited to 24 inputs");
        }
        const std::uint64_t size = std::uint64_t{1} << n_in;
        for (std::uint64_t w = 0; w < size; ++w) {
            const std::uint64_t expected = oracle(w);
            const std::uint64_t actual = simulate_word(netlist, w);
            res.cases_checked += 1;
            if (expected != actual) {
                record_failure(w, expected, actual);
                return res;
            }
        }
        return res;
    }

    if (n_in > 63) {
        throw std::invalid_argument("random word check limited to 63 inputs");
    }
    if (mode.count < 1) {
        throw std::invalid_argument("random check needs a positive sample count");
    }
    Lcg64 rng(mode.seed);
    for (long long i = 0; i < mode.count; ++i) {
        const std::uint64_t w = n_in == 0 ? 0 : rng.next_word(n_in);
        const std::uint64_t expected = oracle(w);
        const std::uint64_t actual = simulate_word(netlist, w);
        res.cases_checked += 1;
        if (expected != actual) {
            record_failure(w, expected, actual);
            return res;
        }
    }
    return res;
}

WordOracle adder_oracle(int bits) {
    if (bits < 1 || bits > 31) {
        throw std::invalid_argument("adder oracle supports 1 to 31 bits");
    }
    return [bits](std::uint64_t w) -> std::uint64_t {
        const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;
        const std::uint64_t a = (w >> (bits + 1)) & mask;
        const std::uint64_t b = (w >> 1) & mask;
        const std::uint64_t cin = w & 1;
        const std::uint64_t sum = a + b + cin;
        return ((sum & mask) << 1) | (sum >> bits);
    };
}

EquivalenceResult check_adder_equivalence(const Netlist& netlist, int bits,
                                          const EquivalenceMode& mode) {
    if (bits < 1) throw std::invalid_argument("adder width must be positive");
    const int n_in = 2 * bits + 1;
    const int n_out = bits + 1;
    if (netlist.input_count() != n_in || netlist.output_count() != n_out) {
        throw std::invalid_argument(
            "netlist does not have the " + std::to_string(bits) + "-bit adder interface: expected " +
            std::to_string(n_in) + " inputs and " + std::to_string(n_out) + " outputs, got " +
            std::to_string(netlist.input_count()) + " and " +
            std::to_string(netlist.output_count()));
    }
    if (n_in <= 63 && bits <= 31) {
        return check_equivalence(netlist, adder_oracle(bits), mode);
    }
    if (mode.is_exhaustive) {
        throw std::invalid_argument("exhaustive check limited to 24 inputs");
    }
    if (mode.count < 1) {
        throw std::invalid_argument("random check needs a positive sample count");
    }

    // Wide path: sample bit vectors, one generator state per 64 input bits,
    // and add with a schoolbook carry chain.
    EquivalenceResult res;
    Lcg64 rng(mode.seed);
    std::vector<int> input_bits(static_cast<std::size_t>(n_in));
    for (long long sample = 0; sample < mode.count; ++sample) {
        std::uint64_t state = 0;
        for (int j = 0; j < n_in; ++j) {
            if (j % 64 == 0) state = rng.next();
            input_bits[static_cast<std::size_t>(j)] =
                static_cast<int>((state >> (63 - (j % 64))) & 1u);
        }

        std::vector<int> expected(static_cast<std::size_t>(n_out), 0);
        int carry = input_bits[static_cast<std::size_t>(2 * bits)];
        for (int i = bits - 1; i >= 0; --i) {
            const int s = input_bits[static_cast<std::size_t>(i)] +
                          input_bits[static_cast<std::size_t>(bits + i)] + carry;
            expected[static_cast<std::size_t>(i)] = s & 1;
            carry = s >> 1;
        }
        expected[static_cast<std::size_t>(bits)] = carry;

        const SimulationResult sim = simulate(netlist, input_bits);
        res.cases_checked += 1;
        if (sim.outputs != expected) {
            res.pass = false;
            res.counterexample = bits_of(input_bits);
            res.expected = bits_of(expected);
            res.actual = bits_of(sim.outputs);
            return res;
        }
    }
    return res;
}

}  // namespace revskip
