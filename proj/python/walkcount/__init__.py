"""Endpoint-counting dynamics on metric graphs.

Thin wrapper over the compiled extension; see the project README for the
underlying model and the CLI.
"""

from walkcount._core import (  # noqa: F401
    MetricGraph,
    RootedTree,
    WalkcountError,
    best_partition,
    best_tree,
    brute_force_points,
    degree,
    make_chain,
    make_complete,
    make_star_of_chains,
    minimize_by_surgery,
    n1_coefficient,
    n2_coefficient,
    n_profile,
    p2,
    partition_objective,
    root_degree_growth_scan,
    run_acceptance,
    split_s_t,
    t1_apply,
    t1_delta,
    t2_apply,
    t2_delta,
    validate,
)

__all__ = [
    "MetricGraph",
    "RootedTree",
    "WalkcountError",
    "best_partition",
    "best_tree",
    "brute_force_points",
    "degree",
    "make_chain",
    "make_complete",
    "make_star_of_chains",
    "minimize_by_surgery",
    "n1_coefficient",
    "n2_coefficient",
    "n_profile",
    "p2",
    "partition_objective",
    "root_degree_growth_scan",
    "run_acceptance",
    "split_s_t",
    "t1_apply",
    "t1_delta",
    "t2_apply",
    "t2_delta",
    "validate",
]
