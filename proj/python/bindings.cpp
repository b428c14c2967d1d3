// Python bindings: thin wrappers that keep the C++ types behind plain
// dicts, lists and tuples wherever the structs are pure data.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "revskip/adders.hpp"
#include "revskip/bounds.hpp"
#include "revskip/cli.hpp"
#include "revskip/delay.hpp"
#include "revskip/gate.hpp"
#include "revskip/netlist.hpp"

namespace py = pybind11;
using namespace revskip;

namespace {

py::object classical_cost_tuple(const std::optional<ClassicalCost>& cost) {
    if (!cost) return py::none();
    return py::make_tuple(cost->xor_count, cost->and_count, cost->not_count);
}

py::dict metrics_dict(const Netlist& netlist) {
    const Metrics m = metrics(netlist);
    py::dict d;
    d["gates"] = m.gate_count;
    d["kinds"] = m.gate_count_by_kind;
    d["qcost"] = m.quantum_cost ? py::cast(*m.quantum_cost) : py::none();
    d["classical"] = classical_cost_tuple(m.classical_cost);
    d["constants"] = m.constant_inputs;
    d["garbage"] = m.garbage_outputs;
    d["inputs"] = m.primary_inputs;
    d["outputs"] = m.primary_outputs;
    d["width"] = m.width;
    d["depth"] = m.depth;
    return d;
}

py::dict simulation_dict(const Netlist& netlist, const std::vector<int>& bits) {
    const SimulationResult result = simulate(netlist, bits);
    py::dict d;
    d["outputs"] = result.outputs;
    d["garbage"] = result.garbage;
    d["lines"] = result.final_lines;
    py::list marks;
    for (std::size_t i = 0; i < netlist.marks().size(); ++i) {
        marks.append(py::make_tuple(netlist.marks()[i].label, result.mark_values[i]));
    }
    d["marks"] = marks;
    return d;
}

py::dict arrival_dict(const Netlist& netlist) {
    const ArrivalMap arrivals = arrival_times(netlist);
    py::dict d;
    d["line_time"] = arrivals.line_time;
    d["depth"] = arrivals.depth;
    py::list marks;
    for (std::size_t i = 0; i < netlist.marks().size(); ++i) {
        marks.append(py::make_tuple(netlist.marks()[i].label, arrivals.mark_time[i]));
    }
    d["marks"] = marks;
    return d;
}

py::dict equivalence_dict(const EquivalenceResult& result) {
    py::dict d;
    d["pass"] = result.pass;
    d["cases"] = result.cases_checked;
    d["counterexample"] = result.counterexample;
    d["expected"] = result.expected;
    d["actual"] = result.actual;
    return d;
}

py::dict bounds_dict(const BoundsReport& report) {
    py::dict d;
    d["mu"] = report.max_multiplicity;
    d["min_garbage"] = report.min_garbage;
    d["min_constants"] = report.min_constant_inputs;
    d["total_outputs"] = report.total_outputs;
    return d;
}

DelayForm parse_form(bool exact) { return exact ? DelayForm::Exact : DelayForm::Approx; }

AdderFamily parse_family(const std::string& family) {
    if (family == "fixed") return AdderFamily::Fixed;
    if (family == "variable") return AdderFamily::Variable;
    throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "reversible carry-skip adder toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Gate>(m, "Gate")
        .def_property_readonly("name", &Gate::name)
        .def_property_readonly("width", &Gate::width)
        .def_property_readonly("quantum_cost", &Gate::quantum_cost)
        .def_property_readonly(
            "classical_cost",
            [](const Gate& g) { return classical_cost_tuple(g.classical_cost()); })
        .def("support", &Gate::support, py::arg("port"))
        .def("eval", &Gate::eval, py::arg("input"))
        .def("truth_table", [](const Gate& g) { return gate_truth_table(g).entries; })
        .def(py::self == py::self)
        .def("__repr__", [](const Gate& g) {
            return "<Gate " + g.name() + " width " + std::to_string(g.width()) + ">";
        });

    m.def("named_gate", [](const std::string& name) { return make_named_gate(name); },
          py::arg("name"), "One of: not, feynman, toffoli, fredkin, peres.");
    m.def(
        "generalized_gate",
        [](int width, const std::string& f_low, const std::string& f_high,
           const std::string& name) {
            return make_generalized_gate({width, f_low, f_high}, name);
        },
        py::arg("width"), py::arg("f_low"), py::arg("f_high"), py::arg("name") = "custom");

    py::class_<Netlist>(m, "Netlist")
        .def_property_readonly("line_count", &Netlist::line_count)
        .def_property_readonly("input_count", &Netlist::input_count)
        .def_property_readonly("output_count", &Netlist::output_count)
        .def("render", [](const Netlist& n) { return render_netlist(n); })
        .def("metrics", &metrics_dict)
        .def("simulate", &simulation_dict, py::arg("bits"))
        .def("simulate_word", [](const Netlist& n, std::uint64_t w) { return simulate_word(n, w); },
             py::arg("word"))
        .def("truth_table", [](const Netlist& n) { return truth_table(n); })
        .def("arrival", &arrival_dict)
        .def(py::self == py::self)
        .def("__repr__", [](const Netlist& n) {
            return "<Netlist " + std::to_string(n.line_count()) + " lines, " +
                   std::to_string(n.gates().size()) + " gates>";
        });

    m.def("parse_netlist", [](const std::string& text) { return parse_netlist(text); },
          py::arg("text"));

    m.def("peres_full_adder", &peres_full_adder);
    m.def("ripple_adder", &ripple_adder, py::arg("bits"));
    m.def("and_tree", &and_tree, py::arg("leaves"));
    m.def("carry_skip_block", &carry_skip_block, py::arg("block_bits"));
    m.def("fixed_block_adder", &fixed_block_adder, py::arg("bits"), py::arg("block_bits"));
    m.def("variable_block_adder", &variable_block_adder, py::arg("bits"),
          py::arg("block_count"));
    m.def("fixed_plan", [](long long bits, int block) { return fixed_plan(bits, block).block_sizes; },
          py::arg("bits"), py::arg("block_bits"));
    m.def("block_plan",
          [](long long bits, int count) { return block_plan(bits, count).block_sizes; },
          py::arg("bits"), py::arg("block_count"));

    m.def(
        "check_adder_equivalence",
        [](const Netlist& netlist, int bits, bool exhaustive, long long samples,
           std::uint64_t seed) {
            const EquivalenceMode mode =
                exhaustive ? EquivalenceMode::exhaustive() : EquivalenceMode::random(samples, seed);
            return equivalence_dict(check_adder_equivalence(netlist, bits, mode));
        },
        py::arg("netlist"), py::arg("bits"), py::arg("exhaustive") = true,
        py::arg("samples") = 1000, py::arg("seed") = 42);

    m.def("ripple_delay", &ripple_delay, py::arg("block_bits"));
    m.def("skip_delay", &skip_delay, py::arg("block_bits"));
    m.def(
        "fixed_delay",
        [](double bits, double block, bool exact) {
            return fixed_delay(bits, block, parse_form(exact));
        },
        py::arg("bits"), py::arg("block_bits"), py::arg("exact") = true);
    m.def(
        "variable_delay",
        [](double bits, double blocks, bool exact) {
            return variable_delay(bits, blocks, parse_form(exact));
        },
        py::arg("bits"), py::arg("block_count"), py::arg("exact") = true);
    m.def("variable_base_width", &variable_base_width, py::arg("bits"), py::arg("block_count"));
    m.def("collected_variable_delay", &collected_variable_delay, py::arg("block_count"),
          py::arg("base_width"));
    m.def("optimal_fixed_block", &optimal_fixed_block, py::arg("bits"));
    m.def("optimal_fixed_delay", &optimal_fixed_delay, py::arg("bits"));
    m.def("optimal_block_count", &optimal_block_count, py::arg("bits"));
    m.def(
        "variable_optimum",
        [](double bits) {
            const VariableOptimum opt = variable_optimum(bits);
            py::dict d;
            d["block_count"] = opt.block_count;
            d["consistent"] = opt.consistent_delay;
            d["published"] = opt.published_delay;
            return d;
        },
        py::arg("bits"));
    m.def(
        "optimal_delay_table",
        [](const std::vector<double>& sizes) {
            py::list rows;
            for (const TableRow& row : optimal_delay_table(sizes)) {
                rows.append(py::make_tuple(row.bits, row.delay));
            }
            return rows;
        },
        py::arg("sizes"));
    m.def(
        "discrete_optimize",
        [](long long bits, const std::string& family) {
            const ScanResult scan = discrete_optimize(bits, parse_family(family));
            py::dict d;
            d["parameter"] = scan.parameter;
            d["delay"] = scan.delay;
            return d;
        },
        py::arg("bits"), py::arg("family"));
    m.def("format_fixed2", &format_fixed2, py::arg("value"));

    py::class_<FunctionTable>(m, "FunctionTable")
        .def_property_readonly("input_count",
                               [](const FunctionTable& t) { return t.input_count; })
        .def_property_readonly("output_count",
                               [](const FunctionTable& t) { return t.output_count; })
        .def_property_readonly("rows", [](const FunctionTable& t) { return t.rows; });

    m.def("parse_function_table",
          [](const std::string& text) { return parse_function_table(text); }, py::arg("text"));
    m.def(
        "function_table",
        [](int inputs, int outputs, const std::vector<std::uint32_t>& rows) {
            FunctionTable table{inputs, outputs, rows};
            table.validate();
            return table;
        },
        py::arg("inputs"), py::arg("outputs"), py::arg("rows"));
    m.def("analyze_bounds",
          [](const FunctionTable& table) { return bounds_dict(analyze_bounds(table)); },
          py::arg("table"));
    m.def(
        "verify_realization",
        [](const FunctionTable& table, const Netlist& netlist) {
            const RealizationCheck check = verify_realization(table, netlist);
            py::dict d;
            d["pass"] = check.pass;
            d["reason"] = check.reason;
            d["bounds"] = bounds_dict(check.bounds);
            d["garbage"] = check.garbage_outputs;
            d["constants"] = check.constant_inputs;
            return d;
        },
        py::arg("table"), py::arg("netlist"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Returns (exit_code, stdout, stderr).");
}
