"""Reversible carry-skip adder toolkit.

Gate-level netlists built from reversible gates, generators for the
two-Peres full adder and carry-skip adders, the closed-form delay model
with its discrete oracle, and garbage/constant-input lower bounds.
"""

from revskip._core import (
    FunctionTable,
    Gate,
    Netlist,
    ParseError,
    analyze_bounds,
    and_tree,
    block_plan,
    carry_skip_block,
    check_adder_equivalence,
    collected_variable_delay,
    discrete_optimize,
    fixed_block_adder,
    fixed_delay,
    fixed_plan,
    format_fixed2,
    function_table,
    generalized_gate,
    named_gate,
    optimal_block_count,
    optimal_delay_table,
    optimal_fixed_block,
    optimal_fixed_delay,
    parse_function_table,
    parse_netlist,
    peres_full_adder,
    ripple_adder,
    ripple_delay,
    run_cli,
    skip_delay,
    variable_base_width,
    variable_block_adder,
    variable_delay,
    variable_optimum,
    verify_realization,
)

__all__ = [
    "FunctionTable",
    "Gate",
    "Netlist",
    "ParseError",
    "analyze_bounds",
    "and_tree",
    "block_plan",
    "carry_skip_block",
    "check_adder_equivalence",
    "collected_variable_delay",
    "discrete_optimize",
    "fixed_block_adder",
    "fixed_delay",
    "fixed_plan",
    "format_fixed2",
    "function_table",
    "generalized_gate",
    "named_gate",
    "optimal_block_count",
    "optimal_delay_table",
    "optimal_fixed_block",
    "optimal_fixed_delay",
    "parse_function_table",
    "parse_netlist",
    "peres_full_adder",
    "ripple_adder",
    "ripple_delay",
    "run_cli",
    "skip_delay",
    "variable_base_width",
    "variable_block_adder",
    "variable_delay",
    "variable_optimum",
    "verify_realization",
]
