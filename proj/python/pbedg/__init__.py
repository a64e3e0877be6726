"""Positivity-preserving DG solver for coagulation-fragmentation population
balance equations.

The heavy numerics live in the compiled extension ``_pbedg``; this package
re-exports its public surface. Typical use::

    import pbedg

    case = pbedg.make_case("coupled-steady")
    mesh = pbedg.Mesh.geometric(30, case.x_min)
    rule = pbedg.QuadratureRule.gauss(2)
    tables = pbedg.build_breakage_tables(mesh, rule, case.kernels)
    state = pbedg.initialize(case.initial, mesh, 1, rule)

    config = pbedg.RunConfig()
    config.t_end, config.dt_initial = 0.01, 1e-4
    state, trace = pbedg.advance(state, mesh, rule, case.kernels, tables, config)
"""

from ._pbedg import (
    BenchmarkCase,
    BreakageTables,
    DGState,
    HalvingEvent,
    KernelSet,
    LimiterMode,
    LimiterReport,
    Mesh,
    OutputSample,
    QuadratureRule,
    RunConfig,
    RunTrace,
    SolverError,
    TimeMethod,
    advance,
    aggregation_extent,
    build_breakage_tables,
    case_ids,
    cfl_max_dt,
    eoc,
    error_continuous,
    error_discrete,
    initialize,
    limit_state,
    make_case,
    moments,
    pde_residual,
    self_error,
)

__all__ = [
    "BenchmarkCase",
    "BreakageTables",
    "DGState",
    "HalvingEvent",
    "KernelSet",
    "LimiterMode",
    "LimiterReport",
    "Mesh",
    "OutputSample",
    "QuadratureRule",
    "RunConfig",
    "RunTrace",
    "SolverError",
    "TimeMethod",
    "advance",
    "aggregation_extent",
    "build_breakage_tables",
    "case_ids",
    "cfl_max_dt",
    "eoc",
    "error_continuous",
    "error_discrete",
    "initialize",
    "limit_state",
    "make_case",
    "moments",
    "pde_residual",
    "self_error",
]
