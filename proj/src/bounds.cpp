#include "revskip/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace revskip {

namespace {

constexpr int kMaxTableArity = 20;

std::string to_bits(std::uint64_t word, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((word >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

int ceil_log2_count(long long count) {
    int g = 0;
    while ((1LL << g) < count) ++g;
    return g;
}

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

}  // namespace

void FunctionTable::validate() const {
    if (input_count < 1 || input_count > kMaxTableArity) {
        throw std::invalid_argument("table input arity must be between 1 and " +
                                    std::to_string(kMaxTableArity));
    }
    if (output_count < 1 || output_count > kMaxTableArity) {
        throw std::invalid_argument("table output arity must be between 1 and " +
                                    std::to_string(kMaxTableArity));
    }
    const std::size_t expected = std::size_t{1} << input_count;
    if (rows.size() != expected) {
        throw std::invalid_argument("incomplete table: expected " + std::to_string(expected) +
                                    " rows, got " + std::to_string(rows.size()));
    }
    const std::uint32_t limit = std::uint32_t{1} << output_count;
    for (std::uint32_t row : rows) {
        if (row >= limit) {
            throw std::invalid_argument("output word exceeds the declared arity");
        }
    }
}

FunctionTable parse_function_table(std::string_view text) {
    int line_no = 0;
    auto fail = [&line_no](const std::string& msg) {
        throw ParseError("ftab:" + std::to_string(std::max(line_no, 1)) + ": " + msg);
    };
    auto parse_word = [&fail](const std::string& token, int width,
                              const char* what) -> std::uint32_t {
        if (static_cast<int>(token.size()) != width) {
            fail(std::string(what) + " must have " + std::to_string(width) + " bits, got '" +
                 token + "'");
        }
        std::uint32_t word = 0;
        for (char c : token) {
            if (c != '0' && c != '1') fail(std::string(what) + " must contain only 0 and 1");
            word = (word << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return word;
    };

    FunctionTable table;
    bool header_seen = false;
    std::vector<bool> seen;
    std::size_t rows_seen = 0;

    std::istringstream stream{std::string(text)};
    std::string raw;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(raw);
        if (tokens.empty()) continue;

        if (!header_seen) {
            if (tokens.size() != 3 || tokens[0] != "ftab") {
                fail("expected header 'ftab <inputs> <outputs>'");
            }
            int in_arity = 0;
            int out_arity = 0;
            auto read = [&fail](const std::string& t, int& out) {
                auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
                if (ec != std::errc() || ptr != t.data() + t.size()) {
                    fail("expected integer, got '" + t + "'");
                }
            };
            read(tokens[1], in_arity);
            read(tokens[2], out_arity);
            if (in_arity < 1 || in_arity > kMaxTableArity || out_arity < 1 ||
                out_arity > kMaxTableArity) {
                fail("arity must be between 1 and " + std::to_string(kMaxTableArity));
            }
            table.input_count = in_arity;
            table.output_count = out_arity;
            table.rows.assign(std::size_t{1} << in_arity, 0);
            seen.assign(std::size_t{1} << in_arity, false);
            header_seen = true;
            continue;
        }

        if (tokens.size() != 2) fail("expected '<input bits> <output bits>'");
        const std::uint32_t in_word = parse_word(tokens[0], table.input_count, "input word");
        const std::uint32_t out_word = parse_word(tokens[1], table.output_count, "output word");
        if (seen[in_word]) fail("duplicate row for input " + tokens[0]);
        seen[in_word] = true;
        table.rows[in_word] = out_word;
        ++rows_seen;
    }

    if (!header_seen) fail("expected header 'ftab <inputs> <outputs>'");
    if (rows_seen != seen.size()) {
        for (std::size_t w = 0; w < seen.size(); ++w) {
            if (!seen[w]) {
                throw ParseError("missing row for input " +
                                 to_bits(w, table.input_count));
            }
        }
    }
    return table;
}

BoundsReport analyze_bounds(const FunctionTable& table) {
    table.validate();
    std::vector<long long> counts(std::size_t{1} << table.output_count, 0);
    for (std::uint32_t row : table.rows) {
        counts[row] += 1;
    }
    BoundsReport report;
    report.max_multiplicity = *std::max_element(counts.begin(), counts.end());
    report.min_garbage = ceil_log2_count(report.max_multiplicity);
    report.min_constant_inputs =
        std::max(0, table.output_count + report.min_garbage - table.input_count);
    report.total_outputs = table.output_count + report.min_garbage;
    return report;
}

RealizationCheck verify_realization(const FunctionTable& table, const Netlist& netlist) {
    table.validate();
    if (netlist.input_count() != table.input_count ||
        netlist.output_count() != table.output_count) {
        throw std::invalid_argument(
            "netlist interface does not match the table: expected " +
            std::to_string(table.input_count) + " inputs and " +
            std::to_string(table.output_count) + " outputs, got " +
            std::to_string(netlist.input_count()) + " and " +
            std::to_string(netlist.output_count()));
    }

    RealizationCheck check;
    check.bounds = analyze_bounds(table);
    const Metrics m = metrics(netlist);
    check.garbage_outputs = m.garbage_outputs;
    check.constant_inputs = m.constant_inputs;

    const std::vector<std::uint64_t> actual = truth_table(netlist);
    for (std::size_t w = 0; w < actual.size(); ++w) {
        if (actual[w] != table.rows[w]) {
            check.pass = false;
            check.reason = "function mismatch at input " +
                           to_bits(w, table.input_count) + ": expected " +
                           to_bits(table.rows[w], table.output_count) + ", got " +
                           to_bits(actual[w], table.output_count);
            return check;
        }
    }
    if (check.garbage_outputs < check.bounds.min_garbage) {
        check.pass = false;
        check.reason = "insufficient garbage outputs: " + std::to_string(check.garbage_outputs) +
                       " below the bound " + std::to_string(check.bounds.min_garbage);
        return check;
    }
    if (check.constant_inputs < check.bounds.min_constant_inputs) {
        check.pass = false;
        check.reason = "insufficient constant inputs: " + std::to_string(check.constant_inputs) +
                       " below the bound " + std::to_string(check.bounds.min_constant_inputs);
        return check;
    }
    return check;
}

}  // namespace revskip
