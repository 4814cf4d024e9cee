"""Minimum-size generating partitions for bounded-part partitions, exact
verification oracles, and split-demand instance expansion."""

from .demand import (
    Copy,
    Customer,
    ExpandedInstance,
    InstanceSpec,
    SplitAssignment,
    expand_instance,
    expansion_bound,
    read_copy_assignment,
    read_expanded,
    read_instance,
    read_tsplib,
    recover_solution,
    with_passthrough,
    write_expanded,
    write_instance,
)
from .oracle import (
    InfeasibleGeneratorError,
    MinSizeResult,
    SearchBudgetExceeded,
    SearchStats,
    VerificationReport,
    brute_force_min_size,
    check_prefix_dominance,
    check_suffix_property,
    feasible_generators,
    generates_all,
    generates_exact,
    observation_cap,
)
from .partitions import (
    GenerationPlan,
    GreedyResult,
    GreedyStep,
    GreedyTrace,
    Partition,
    SizeTable,
    build_size_table,
    count_partitions,
    enumerate_partitions,
    exact_size_partitions,
    generator_size,
    greedy_generate,
    make_partition,
    minimal_generator,
    size_row,
    size_upper_bound,
)

__all__ = [
    "Copy",
    "Customer",
    "ExpandedInstance",
    "GenerationPlan",
    "GreedyResult",
    "GreedyStep",
    "GreedyTrace",
    "InfeasibleGeneratorError",
    "InstanceSpec",
    "MinSizeResult",
    "Partition",
    "SearchBudgetExceeded",
    "SearchStats",
    "SizeTable",
    "SplitAssignment",
    "VerificationReport",
    "brute_force_min_size",
    "build_size_table",
    "check_prefix_dominance",
    "check_suffix_property",
    "count_partitions",
    "enumerate_partitions",
    "exact_size_partitions",
    "expand_instance",
    "expansion_bound",
    "feasible_generators",
    "generates_all",
    "generates_exact",
    "generator_size",
    "greedy_generate",
    "make_partition",
    "minimal_generator",
    "observation_cap",
    "read_copy_assignment",
    "read_expanded",
    "read_instance",
    "read_tsplib",
    "recover_solution",
    "size_row",
    "size_upper_bound",
    "with_passthrough",
    "write_expanded",
    "write_instance",
]
