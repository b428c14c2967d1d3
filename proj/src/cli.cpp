#include "revskip/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "revskip/adders.hpp"
#include "revskip/bounds.hpp"
#include "revskip/delay.hpp"
#include "revskip/gate.hpp"
#include "revskip/netlist.hpp"

namespace revskip {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file '" + path + "'");
    }
    out << content;
}

std::string word_bits(std::uint64_t word, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i) {
        if ((word >> (width - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

const std::string kBaseWidthFlag =
    "flag: base width b = N/t - t/4 + 1/2; the published form N/2 - t/4 + 1/2 is "
    "inconsistent with the collected delay t^2/8 + 11t/4 + bt/2 + 3b - 4";

const std::string kOptimumGapFlag =
    "flag: the published optimal delay N/2 + sqrt(3)*sqrt(N) - 5/2 is inconsistent with "
    "the delay model at the optimal block count, which gives N/2 + 3*sqrt(3)*sqrt(N) - 5/2; "
    "gap = 2*sqrt(3)*sqrt(N)";

void print_report(const DelayReport& report, std::ostream& out) {
    for (const DelayValue& value : report.values) {
        out << value.name << "=" << format_fixed2(value.value) << "\n";
    }
    for (const std::string& flag : report.flags) {
        out << flag << "\n";
    }
}

int cmd_gate_truth(const std::string& name, std::ostream& out) {
    const Gate gate = make_named_gate(name);
    const TruthTable table = gate_truth_table(gate);
    out << "# gate " << gate.name() << " width " << gate.width() << "\n";
    for (std::size_t w = 0; w < table.entries.size(); ++w) {
        out << word_bits(w, table.width) << " -> " << word_bits(table.entries[w], table.width)
            << "\n";
    }
    return 0;
}

int cmd_sim(const std::string& netlist_path, const std::string& inputs, std::ostream& out) {
    const Netlist netlist = parse_netlist(read_file(netlist_path));
    if (static_cast<int>(inputs.size()) != netlist.input_count()) {
        throw std::invalid_argument("expected " + std::to_string(netlist.input_count()) +
                                    " input bits, got " + std::to_string(inputs.size()));
    }
    std::vector<int> bits;
    for (char c : inputs) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("input bits must contain only 0 and 1");
        }
        bits.push_back(c - '0');
    }
    const SimulationResult result = simulate(netlist, bits);
    bool first = true;
    for (std::size_t i = 0; i < netlist.output_lines().size(); ++i) {
        const int line = netlist.output_lines()[i];
        if (!first) out << " ";
        out << netlist.sinks()[static_cast<std::size_t>(line)].name << "="
            << result.outputs[i];
        first = false;
    }
    out << "\n";
    std::string garbage;
    for (int b : result.garbage) garbage.push_back(b ? '1' : '0');
    out << "garbage=" << garbage << "\n";
    return 0;
}

int cmd_truthtable(const std::string& netlist_path, std::ostream& out) {
    const Netlist netlist = parse_netlist(read_file(netlist_path));
    out << "# inputs";
    for (int line : netlist.input_lines()) {
        out << " " << netlist.sources()[static_cast<std::size_t>(line)].name;
    }
    out << "\n# outputs";
    for (int line : netlist.output_lines()) {
        out << " " << netlist.sinks()[static_cast<std::size_t>(line)].name;
    }
    out << "\n";
    const std::vector<std::uint64_t> table = truth_table(netlist);
    for (std::size_t w = 0; w < table.size(); ++w) {
        out << word_bits(w, netlist.input_count()) << " -> "
            << word_bits(table[w], netlist.output_count()) << "\n";
    }
    return 0;
}

int cmd_metrics(const std::string& netlist_path, const std::string& format, std::ostream& out) {
    const Netlist netlist = parse_netlist(read_file(netlist_path));
    const Metrics m = metrics(netlist);
    const std::string qcost =
        m.quantum_cost ? std::to_string(*m.quantum_cost) : std::string("unknown");
    std::string xors = "unknown", ands = "unknown", nots = "unknown";
    if (m.classical_cost) {
        xors = std::to_string(m.classical_cost->xor_count);
        ands = std::to_string(m.classical_cost->and_count);
        nots = std::to_string(m.classical_cost->not_count);
    }
    if (format == "csv") {
        out << "gates,garbage,constants,qcost,depth,width,inputs,outputs,xor,and,not\n";
        out << m.gate_count << "," << m.garbage_outputs << "," << m.constant_inputs << ","
            << qcost << "," << m.depth << "," << m.width << "," << m.primary_inputs << ","
            << m.primary_outputs << "," << xors << "," << ands << "," << nots << "\n";
        return 0;
    }
    out << "gates=" << m.gate_count << " garbage=" << m.garbage_outputs
        << " constants=" << m.constant_inputs << " qcost=" << qcost << " depth=" << m.depth
        << " width=" << m.width << " inputs=" << m.primary_inputs
        << " outputs=" << m.primary_outputs << " xor=" << xors << " and=" << ands
        << " not=" << nots;
    out << " kinds=";
    bool first = true;
    for (const auto& [kind, count] : m.gate_count_by_kind) {
        if (!first) out << ",";
        out << kind << ":" << count;
        first = false;
    }
    out << "\n";
    return 0;
}

int cmd_build(const std::string& kind, long long bits, long long block, long long blocks,
              const std::string& output_path, std::ostream&) {
    const Netlist netlist = [&]() -> Netlist {
        if (kind == "fulladder") return peres_full_adder();
        if (kind == "ripple") {
            if (bits < 0) throw std::invalid_argument("kind ripple requires --bits");
            return ripple_adder(static_cast<int>(bits));
        }
        if (kind == "skip-fixed") {
            if (bits < 0 || block < 0) {
                throw std::invalid_argument("kind skip-fixed requires --bits and --block");
            }
            return fixed_block_adder(static_cast<int>(bits), static_cast<int>(block));
        }
        if (kind == "skip-variable") {
            if (bits < 0 || blocks < 0) {
                throw std::invalid_argument("kind skip-variable requires --bits and --blocks");
            }
            return variable_block_adder(static_cast<int>(bits), static_cast<int>(blocks));
        }
        throw std::invalid_argument("unknown build kind '" + kind + "'");
    }();
    write_file(output_path, render_netlist(netlist));
    return 0;
}

int cmd_verify(const std::string& netlist_path, const std::string& oracle, long long bits,
               bool exhaustive, long long random_count, std::uint64_t seed, std::ostream& out) {
    if (oracle != "adder") {
        throw std::invalid_argument("unknown oracle '" + oracle + "'");
    }
    if (bits < 1) throw std::invalid_argument("--bits must be positive");
    if (exhaustive == (random_count >= 0)) {
        throw std::invalid_argument("choose exactly one of --exhaustive and --random");
    }
    const Netlist netlist = parse_netlist(read_file(netlist_path));
    const EquivalenceMode mode = exhaustive ? EquivalenceMode::exhaustive()
                                            : EquivalenceMode::random(random_count, seed);
    const EquivalenceResult result =
        check_adder_equivalence(netlist, static_cast<int>(bits), mode);
    if (result.pass) {
        out << "pass cases=" << result.cases_checked << "\n";
        return 0;
    }
    out << "counterexample=" << result.counterexample << " expected=" << result.expected
        << " got=" << result.actual << "\n";
    return 2;
}

int cmd_delay(const std::string& model, long long bits, long long block, long long blocks,
              std::ostream& out) {
    if (bits < 1) throw std::invalid_argument("--bits must be positive");
    DelayReport report;
    const double n = static_cast<double>(bits);
    if (model == "ripple") {
        report.values.push_back({"d_ripple", ripple_delay(n)});
    } else if (model == "skip") {
        report.values.push_back({"d_skip", skip_delay(n)});
    } else if (model == "fixed" || model == "fixed-approx") {
        if (block < 1) throw std::invalid_argument("model " + model + " requires --block");
        const DelayForm form = model == "fixed" ? DelayForm::Exact : DelayForm::Approx;
        report.values.push_back({"T_fixed", fixed_delay(n, static_cast<double>(block), form)});
    } else if (model == "variable" || model == "variable-approx") {
        if (blocks < 2) throw std::invalid_argument("model " + model + " requires --blocks");
        const double t = static_cast<double>(blocks);
        const double base = variable_base_width(n, t);
        report.values.push_back({"b", base});
        report.flags.push_back(kBaseWidthFlag);
        if (model == "variable") {
            report.values.push_back({"T_variable", variable_delay(n, t, DelayForm::Exact)});
            if (base != std::floor(base)) {
                report.flags.push_back(
                    "flag: fractional base width " + format_fixed2(base) +
                    "; the skip summation bounds use floor(b) = " +
                    std::to_string(static_cast<long long>(std::floor(base))));
            }
        } else {
            report.values.push_back({"T_variable", variable_delay(n, t, DelayForm::Approx)});
        }
    } else {
        throw std::invalid_argument("unknown delay model '" + model + "'");
    }
    print_report(report, out);
    return 0;
}

int cmd_table3(const std::string& sizes_arg, const std::string& format, std::ostream& out) {
    std::vector<long long> sizes;
    std::string token;
    std::istringstream stream(sizes_arg);
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t pos = 0;
            const long long n = std::stoll(token, &pos);
            if (pos != token.size() || n < 1) throw std::invalid_argument("");
            sizes.push_back(n);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid size '" + token + "'");
        }
    }
    if (sizes.empty()) throw std::invalid_argument("--sizes must list at least one value");

    const char sep = format == "csv" ? ',' : ' ';
    out << "N" << sep << "T_fixed_peres\n";
    for (long long n : sizes) {
        out << n << sep << format_fixed2(optimal_fixed_delay(static_cast<double>(n))) << "\n";
    }
    return 0;
}

int cmd_optimize(long long bits, const std::string& family, bool discrete, std::ostream& out) {
    if (bits < 1) throw std::invalid_argument("--bits must be positive");
    const double n = static_cast<double>(bits);
    DelayReport report;
    if (family == "fixed") {
        report.values.push_back({"B_opt", optimal_fixed_block(n)});
        report.values.push_back({"T_fixed_opt", optimal_fixed_delay(n)});
    } else if (family == "variable") {
        const VariableOptimum opt = variable_optimum(n);
        report.values.push_back({"t_opt", opt.block_count});
        report.values.push_back({"T_variable_opt_consistent", opt.consistent_delay});
        report.values.push_back({"T_variable_opt_published", opt.published_delay});
        report.flags.push_back(kOptimumGapFlag);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    print_report(report, out);
    if (discrete) {
        const ScanResult scan = discrete_optimize(
            bits, family == "fixed" ? AdderFamily::Fixed : AdderFamily::Variable);
        out << (family == "fixed" ? "B_discrete=" : "t_discrete=") << scan.parameter << "\n";
        out << "T_discrete=" << format_fixed2(scan.delay) << "\n";
    }
    return 0;
}

int cmd_bounds(const std::string& ftab_path, const std::string& check_path, std::ostream& out) {
    const FunctionTable table = parse_function_table(read_file(ftab_path));
    const BoundsReport report = analyze_bounds(table);
    out << "mu=" << report.max_multiplicity << " min_garbage=" << report.min_garbage
        << " min_constants=" << report.min_constant_inputs
        << " total_outputs=" << report.total_outputs << "\n";
    if (check_path.empty()) return 0;

    const Netlist netlist = parse_netlist(read_file(check_path));
    const RealizationCheck check = verify_realization(table, netlist);
    if (check.pass) {
        out << "check=pass garbage=" << check.garbage_outputs << "/"
            << check.bounds.min_garbage << " constants=" << check.constant_inputs << "/"
            << check.bounds.min_constant_inputs << "\n";
        return 0;
    }
    out << "check=fail reason=" << check.reason << "\n";
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"reversible carry-skip adder toolkit"};
    app.require_subcommand(1);

    // gate truth
    auto* gate_cmd = app.add_subcommand("gate", "gate-level queries");
    gate_cmd->require_subcommand(1);
    std::string gate_name;
    auto* gate_truth = gate_cmd->add_subcommand("truth", "print a builtin gate's truth table");
    gate_truth->add_option("--gate", gate_name, "builtin gate name")->required();

    // sim
    auto* sim_cmd = app.add_subcommand("sim", "simulate one input assignment");
    std::string sim_netlist, sim_inputs;
    sim_cmd->add_option("--netlist", sim_netlist, "rnl file")->required();
    sim_cmd->add_option("--inputs", sim_inputs, "input bits, declaration order")->required();

    // truthtable
    auto* tt_cmd = app.add_subcommand("truthtable", "print the netlist's truth table");
    std::string tt_netlist;
    tt_cmd->add_option("--netlist", tt_netlist, "rnl file")->required();

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "print structural counts and costs");
    std::string metrics_netlist, metrics_format = "text";
    metrics_cmd->add_option("--netlist", metrics_netlist, "rnl file")->required();
    metrics_cmd->add_option("--format", metrics_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    // build
    auto* build_cmd = app.add_subcommand("build", "generate an adder netlist");
    std::string build_kind, build_output;
    long long build_bits = -1, build_block = -1, build_blocks = -1;
    build_cmd->add_option("--kind", build_kind, "fulladder, ripple, skip-fixed or skip-variable")
        ->required()
        ->check(CLI::IsMember({"fulladder", "ripple", "skip-fixed", "skip-variable"}));
    build_cmd->add_option("--bits", build_bits, "adder width N");
    build_cmd->add_option("--block", build_block, "fixed block size B");
    build_cmd->add_option("--blocks", build_blocks, "block count t");
    build_cmd->add_option("-o,--output", build_output, "output rnl file")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a netlist against an oracle");
    std::string verify_netlist, verify_oracle;
    long long verify_bits = -1, verify_random = -1;
    std::uint64_t verify_seed = 42;
    bool verify_exhaustive = false;
    verify_cmd->add_option("--netlist", verify_netlist, "rnl file")->required();
    verify_cmd->add_option("--oracle", verify_oracle, "oracle name (adder)")->required();
    verify_cmd->add_option("--bits", verify_bits, "adder width N")->required();
    verify_cmd->add_flag("--exhaustive", verify_exhaustive, "enumerate every input");
    verify_cmd->add_option("--random", verify_random, "number of random samples");
    verify_cmd->add_option("--seed", verify_seed, "random seed (default 42)");

    // delay
    auto* delay_cmd = app.add_subcommand("delay", "evaluate the delay model");
    std::string delay_model;
    long long delay_bits = -1, delay_block = -1, delay_blocks = -1;
    delay_cmd->add_option("--model", delay_model, "ripple, skip, fixed[-approx], variable[-approx]")
        ->required()
        ->check(CLI::IsMember(
            {"ripple", "skip", "fixed", "fixed-approx", "variable", "variable-approx"}));
    delay_cmd->add_option("--bits", delay_bits, "width N")->required();
    delay_cmd->add_option("--block", delay_block, "fixed block size B");
    delay_cmd->add_option("--blocks", delay_blocks, "block count t");

    // table3
    auto* table_cmd = app.add_subcommand("table3", "optimal fixed-block delays per width");
    std::string table_sizes, table_format = "text";
    table_cmd->add_option("--sizes", table_sizes, "comma list of widths")->required();
    table_cmd->add_option("--format", table_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    // optimize
    auto* opt_cmd = app.add_subcommand("optimize", "closed-form and discrete optima");
    long long opt_bits = -1;
    std::string opt_family;
    bool opt_discrete = false;
    opt_cmd->add_option("--bits", opt_bits, "width N")->required();
    opt_cmd->add_option("--family", opt_family, "fixed or variable")
        ->required()
        ->check(CLI::IsMember({"fixed", "variable"}));
    opt_cmd->add_flag("--discrete", opt_discrete, "also run the integer scan");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "garbage and constant-input lower bounds");
    std::string bounds_ftab, bounds_check;
    bounds_cmd->add_option("--ftab", bounds_ftab, "function table file")->required();
    bounds_cmd->add_option("--check", bounds_check, "netlist to check against the table");

    std::vector<const char*> argv;
    argv.push_back("revskip");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (gate_truth->parsed()) return cmd_gate_truth(gate_name, out);
        if (sim_cmd->parsed()) return cmd_sim(sim_netlist, sim_inputs, out);
        if (tt_cmd->parsed()) return cmd_truthtable(tt_netlist, out);
        if (metrics_cmd->parsed()) return cmd_metrics(metrics_netlist, metrics_format, out);
        if (build_cmd->parsed()) {
            return cmd_build(build_kind, build_bits, build_block, build_blocks, build_output,
                             out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_netlist, verify_oracle, verify_bits, verify_exhaustive,
                              verify_random, verify_seed, out);
        }
        if (delay_cmd->parsed()) return cmd_delay(delay_model, delay_bits, delay_block,
                                                  delay_blocks, out);
        if (table_cmd->parsed()) return cmd_table3(table_sizes, table_format, out);
        if (opt_cmd->parsed()) return cmd_optimize(opt_bits, opt_family, opt_discrete, out);
        if (bounds_cmd->parsed()) return cmd_bounds(bounds_ftab, bounds_check, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n" << app.help();
    return 1;
}

}  // namespace revskip
